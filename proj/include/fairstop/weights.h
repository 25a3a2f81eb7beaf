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

#ifndef FAIRSTOP_WEIGHTS_H_
#define FAIRSTOP_WEIGHTS_H_

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fairstop/distribution.h"

namespace fairstop {

struct WeightSolution {
  std::vector<double> weights;  // weights[0] == 1
  std::vector<double> win_probabilities;
  double residual = 0.0;  // max_i |P(i wins) - 1/n|
  int iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> residuals)
      : std::runtime_error(what), residuals_(std::move(residuals)) {}
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<double> residuals_;
};

struct WeightSolverOptions {
  int max_iterations = 2000;
  double tolerance = 1e-10;
  double damping = 0.5;
};

// P(agent i has the highest weighted value w_i * X_i) for independent
// X_i ~ dists[i], by quadrature. Distributions must be atomless.
std::vector<double> WinProbabilities(std::span<const DistributionSpec> dists,
                                     std::span<const double> weights);

// Weights that equalize every win probability at 1/n. Throws
// std::invalid_argument for distributions with atoms and ConvergenceError
// when the iteration budget runs out.
WeightSolution SolveWeights(std::span<const DistributionSpec> dists,
                            const WeightSolverOptions& options = {});

}  // namespace fairstop

#endif  // FAIRSTOP_WEIGHTS_H_
