// Copyright 2026 The Fairstop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRSTOP_TWO_AGENT_H_
#define FAIRSTOP_TWO_AGENT_H_

#include "fairstop/distribution.h"

namespace fairstop {

// (2 - sqrt(2)) / 2, agent 1's share in the welfare-optimal two-agent split.
inline constexpr double kTwoAgentShare = 0.29289321881345248;

// Integral over [0, hi] of r - |F(s) - (1 - r)|. Positive values mean the
// Pick-r split with share r is envy-free with high probability.
double IntegralConditionA(const DistributionSpec& dist, double share);

struct TwoAgentChoice {
  double share = 0.0;
  double integral = 0.0;
  bool ef_condition_holds = false;
  // Set when 1/2 - m^(-1/4) <= 0 and the share was clamped to 1/m.
  bool below_asymptotic_regime = false;
};

// kTwoAgentShare when IntegralConditionA is strictly positive, otherwise
// 1/2 - m^(-1/4).
TwoAgentChoice SelectTwoAgentR(const DistributionSpec& dist, int items);

}  // namespace fairstop

#endif  // FAIRSTOP_TWO_AGENT_H_
