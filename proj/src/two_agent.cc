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

#include "fairstop/two_agent.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fairstop/numerics.h"

namespace fairstop {
namespace {

// Strict positivity is judged above quadrature noise.
constexpr double kPositiveIntegral = 1e-9;

}  // namespace

double IntegralConditionA(const DistributionSpec& dist, double share) {
  if (!(share > 0.0 && share < 1.0)) {
    throw std::invalid_argument("share must lie in (0, 1)");
  }
  std::vector<double> breaks = dist.Breakpoints();
  breaks.push_back(dist.InverseCdf(1.0 - share));
  auto integrand = [&](double s) {
    return share - std::abs(dist.Cdf(s) - (1.0 - share));
  };
  return IntegratePiecewise(integrand, 0.0, dist.hi(), breaks, 1e-10);
}

TwoAgentChoice SelectTwoAgentR(const DistributionSpec& dist, int items) {
  if (items < 1) throw std::invalid_argument("item count must be positive");
  TwoAgentChoice choice;
  choice.integral = IntegralConditionA(dist, kTwoAgentShare);
  choice.ef_condition_holds = choice.integral > kPositiveIntegral;
  if (choice.ef_condition_holds) {
    choice.share = kTwoAgentShare;
    return choice;
  }
  choice.share = 0.5 - std::pow(static_cast<double>(items), -0.25);
  if (choice.share <= 0.0) {
    choice.share = 1.0 / items;
    choice.below_asymptotic_regime = true;
  }
  return choice;
}

}  // namespace fairstop
