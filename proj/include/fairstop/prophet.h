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

#ifndef FAIRSTOP_PROPHET_H_
#define FAIRSTOP_PROPHET_H_

#include <span>
#include <vector>

#include "fairstop/distribution.h"

namespace fairstop {

// Quantile thresholds: stop at step i iff F(x_i) >= 1 - thresholds[i]. The
// last threshold is 1, so the rule always stops.
struct StoppingRule {
  std::vector<double> thresholds;

  int horizon() const { return static_cast<int>(thresholds.size()); }
};

struct StopOutcome {
  int index = 0;  // 0-based
  double value = 0.0;
};

StopOutcome RunQtp(const StoppingRule& rule, const DistributionSpec& dist,
                   std::span<const double> draws);

// values[i] is the optimal expected reward with steps i..n-1 still to come;
// values[n-1] = E[X]. accept_above[i] is the continuation value the optimal
// rule compares x_i against (lo for the last step).
struct DpSolution {
  std::vector<double> values;
  std::vector<double> accept_above;
};

DpSolution DpOptimalValues(const DistributionSpec& dist, int horizon);

// Optimal gambler reward over E[max of n draws].
double OptimalRatio(const DistributionSpec& dist, int horizon);

// s_i = 1 - F(V_{i+1}), s_n = 1.
StoppingRule BestThresholdRule(const DistributionSpec& dist, int horizon);

// Integral over (0, 1) of dy / (y (1 - ln y) + g - 1) for g > 1.
double KertzIntegral(double g);

struct BetaSolution {
  double beta = 0.0;
  double residual = 0.0;  // |KertzIntegral(1 / beta) - 1|
};

// The asymptotic i.i.d. prophet constant, about 0.745.
BetaSolution SolveBeta();

}  // namespace fairstop

#endif  // FAIRSTOP_PROPHET_H_
