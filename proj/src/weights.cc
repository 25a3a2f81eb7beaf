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

#include "fairstop/weights.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fairstop/numerics.h"

namespace fairstop {

std::vector<double> WinProbabilities(std::span<const DistributionSpec> dists,
                                     std::span<const double> weights) {
  const int n = static_cast<int>(dists.size());
  if (n == 0 || static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("one weight per distribution is required");
  }
  std::vector<double> win(n);
  for (int i = 0; i < n; ++i) {
    // Breakpoints in agent i's value scale: its own knots and every other
    // agent's knots mapped through w_k / w_i.
    std::vector<double> breaks = dists[i].Breakpoints();
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      for (double x : dists[k].Breakpoints()) {
        breaks.push_back(x * weights[k] / weights[i]);
      }
    }
    auto integrand = [&](double x) {
      double value = dists[i].Density(x);
      for (int k = 0; k < n && value > 0.0; ++k) {
        if (k != i) value *= dists[k].Cdf(weights[i] * x / weights[k]);
      }
      return value;
    };
    win[i] = IntegratePiecewise(integrand, dists[i].lo(), dists[i].hi(),
                                breaks, 1e-12);
  }
  return win;
}

WeightSolution SolveWeights(std::span<const DistributionSpec> dists,
                            const WeightSolverOptions& options) {
  const int n = static_cast<int>(dists.size());
  if (n == 0) throw std::invalid_argument("no distributions");
  for (const auto& d : dists) {
    if (d.HasAtoms()) {
      throw std::invalid_argument("weights need atomless distributions: " +
                                  d.Describe());
    }
  }
  const double target = 1.0 / n;
  std::vector<double> log_w(n, 0.0);
  std::vector<double> w(n, 1.0);
  std::vector<double> residuals(n);
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    for (int i = 0; i < n; ++i) w[i] = std::exp(log_w[i] - log_w[0]);
    const std::vector<double> win = WinProbabilities(dists, w);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      residuals[i] = win[i] - target;
      worst = std::max(worst, std::abs(residuals[i]));
    }
    if (worst <= options.tolerance) {
      return {w, win, worst, iter};
    }
    for (int i = 0; i < n; ++i) {
      const double step =
          win[i] > 0.0 ? options.damping * std::log(target / win[i]) : 2.0;
      log_w[i] += std::clamp(step, -2.0, 2.0);
    }
  }
  throw ConvergenceError("weight solver did not converge in " +
                             std::to_string(options.max_iterations) +
                             " iterations",
                         residuals);
}

}  // namespace fairstop
