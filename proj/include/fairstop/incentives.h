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

#ifndef FAIRSTOP_INCENTIVES_H_
#define FAIRSTOP_INCENTIVES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairstop/mechanisms.h"
#include "fairstop/statistics.h"

namespace fairstop {

enum class DsicSearch { kExhaustiveGrid, kHillClimb };

struct DsicOptions {
  DsicSearch search = DsicSearch::kExhaustiveGrid;
  std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
  // Misreports evaluated per agent before the search stops.
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct DeviationReport {
  int agent = 0;
  std::vector<double> misreport;
  double truthful = 0.0;
  double deviation = 0.0;
  double gain = 0.0;
  std::string method;  // grid, perturbation, permutation or hill-climb
};

struct DsicResult {
  // Best witness per agent with gain above the tolerance.
  std::vector<DeviationReport> witnesses;
  bool partial = false;  // some agent's budget ran out
  std::uint64_t evaluations = 0;

  bool clean() const { return witnesses.empty(); }
};

// Agent's true value for what the mechanism gives it under `bids`.
double RealizedUtility(const MechanismSpec& spec, const ValuationMatrix& truth,
                       const ValuationMatrix& bids, int agent,
                       std::span<const DistributionSpec> dists = {});

// Searches unilateral misreports against the truthful profile `values`.
// Exhaustive mode tries every grid vector, coordinate perturbations of the
// true row and (for m <= 6) every permutation of it; it throws
// std::length_error when grid^m exceeds 1e6.
DsicResult DsicAudit(const MechanismSpec& spec, const ValuationMatrix& values,
                     const DsicOptions& options = {},
                     std::span<const DistributionSpec> dists = {});

enum class BicDeviation {
  kTruthful,
  kSwapTopTwo,
  kRandomPermutation,
  kScaleUp,
};

std::string_view BicDeviationTag(BicDeviation deviation);

struct BicOptions {
  int trials = 10'000;
  std::uint64_t seed = 1;
  int deviator = 0;
  int workers = 1;
  double scale = 2.0;
  std::vector<BicDeviation> deviations = {
      BicDeviation::kTruthful, BicDeviation::kSwapTopTwo,
      BicDeviation::kRandomPermutation, BicDeviation::kScaleUp};
};

struct BicEstimate {
  BicDeviation deviation = BicDeviation::kTruthful;
  Interval gain;
  bool violation = false;  // gain.low > 0
};

struct BicReport {
  std::vector<BicEstimate> estimates;
  int trials = 0;
  bool passed = true;
};

// Expected gain of each deviation for the deviator, with others truthful and
// all values drawn from `dists`. Both arms share each trial's draws.
BicReport BicAudit(const MechanismSpec& spec,
                   std::span<const DistributionSpec> dists, int agents,
                   int items, const BicOptions& options = {});

}  // namespace fairstop

#endif  // FAIRSTOP_INCENTIVES_H_
