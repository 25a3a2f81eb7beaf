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

#include "fairstop/prophet.h"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <stdexcept>

#include "fairstop/numerics.h"

namespace fairstop {
namespace {

void CheckHorizon(int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
}

}  // namespace

StopOutcome RunQtp(const StoppingRule& rule, const DistributionSpec& dist,
                   std::span<const double> draws) {
  const int n = rule.horizon();
  if (n == 0 || static_cast<int>(draws.size()) != n) {
    throw std::invalid_argument("one draw per step is required");
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (dist.Cdf(draws[i]) >= 1.0 - rule.thresholds[i]) {
      return {i, draws[i]};
    }
  }
  return {n - 1, draws[n - 1]};
}

DpSolution DpOptimalValues(const DistributionSpec& dist, int horizon) {
  CheckHorizon(horizon);
  DpSolution dp;
  dp.values.assign(horizon, 0.0);
  dp.accept_above.assign(horizon, dist.lo());
  dp.values[horizon - 1] = dist.Mean();
  for (int i = horizon - 2; i >= 0; --i) {
    dp.accept_above[i] = dp.values[i + 1];
    dp.values[i] = dist.ExpectedMaxWith(dp.values[i + 1]);
  }
  return dp;
}

double OptimalRatio(const DistributionSpec& dist, int horizon) {
  CheckHorizon(horizon);
  const double prophet = dist.ExpectedMax(horizon);
  if (!(prophet > 0.0)) {
    throw std::invalid_argument("expected maximum must be positive");
  }
  if (horizon == 1) return 1.0;
  return DpOptimalValues(dist, horizon).values[0] / prophet;
}

StoppingRule BestThresholdRule(const DistributionSpec& dist, int horizon) {
  const DpSolution dp = DpOptimalValues(dist, horizon);
  StoppingRule rule;
  rule.thresholds.assign(horizon, 1.0);
  for (int i = 0; i + 1 < horizon; ++i) {
    rule.thresholds[i] = 1.0 - dist.Cdf(dp.accept_above[i]);
  }
  return rule;
}

double KertzIntegral(double g) {
  if (!(g > 1.0)) throw std::invalid_argument("KertzIntegral needs g > 1");
  // y = exp(-u) maps (0, 1) onto (0, inf) and removes the log singularity.
  auto integrand = [g](double u) {
    const double e = std::exp(-u);
    return e / (e * (1.0 + u) + g - 1.0);
  };
  // The tail beyond u = 60 is below exp(-60) / (g - 1).
  constexpr double kCuts[] = {0.5, 2.0, 6.0, 15.0, 30.0};
  return IntegratePiecewise(integrand, 0.0, 60.0, kCuts, 1e-14);
}

BetaSolution SolveBeta() {
  auto residual = [](double g) { return KertzIntegral(g) - 1.0; };
  const double lo = 1.0 + 1e-3;
  const double hi = 2.0;
  if (!(residual(lo) > 0.0 && residual(hi) < 0.0)) {
    throw std::runtime_error("beta bracket does not straddle the root");
  }
  auto done = [](double a, double b) { return std::abs(b - a) <= 1e-10; };
  const auto [a, b] = boost::math::tools::bisect(residual, lo, hi, done);
  const double g = 0.5 * (a + b);
  return {1.0 / g, std::abs(residual(g))};
}

}  // namespace fairstop
