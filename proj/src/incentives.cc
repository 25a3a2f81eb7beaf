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

#include "fairstop/incentives.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "fairstop/parallel.h"
#include "fairstop/random.h"

namespace fairstop {
namespace {

constexpr std::uint64_t kMaxGridVectors = 1'000'000;
constexpr int kMaxPermutedItems = 6;
constexpr int kRestartEvery = 200;

class AgentSearch {
 public:
  AgentSearch(const MechanismSpec& spec, const ValuationMatrix& truth,
              std::span<const DistributionSpec> dists, int agent,
              const DsicOptions& options)
      : spec_(spec),
        truth_(truth),
        dists_(dists),
        agent_(agent),
        options_(options),
        truthful_(RealizedUtility(spec, truth, truth, agent, dists)) {}

  // Deviator's utility for `report`; nullopt once the budget is spent.
  std::optional<double> Try(std::span<const double> report,
                            const char* method) {
    if (evaluations_ >= options_.budget) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++evaluations_;
    const double u = Evaluate(report);
    if (u - truthful_ > options_.tolerance &&
        (!best_ || u - truthful_ > best_->gain)) {
      best_ = DeviationReport{agent_,
                              {report.begin(), report.end()},
                              truthful_,
                              u,
                              u - truthful_,
                              method};
    }
    return u;
  }

  double Evaluate(std::span<const double> report) const {
    return RealizedUtility(spec_, truth_, truth_.WithRow(agent_, report),
                           agent_, dists_);
  }

  double truthful() const { return truthful_; }
  std::uint64_t evaluations() const { return evaluations_; }
  bool exhausted() const { return exhausted_; }
  const std::optional<DeviationReport>& best() const { return best_; }

 private:
  const MechanismSpec& spec_;
  const ValuationMatrix& truth_;
  std::span<const DistributionSpec> dists_;
  int agent_;
  const DsicOptions& options_;
  double truthful_;
  std::uint64_t evaluations_ = 0;
  bool exhausted_ = false;
  std::optional<DeviationReport> best_;
};

void ExhaustiveSearch(AgentSearch& search, std::span<const double> truth_row,
                      const std::vector<double>& grid) {
  const int m = static_cast<int>(truth_row.size());
  const int g = static_cast<int>(grid.size());
  std::vector<int> digits(m, 0);
  std::vector<double> report(m);
  for (bool more = true; more;) {
    for (int j = 0; j < m; ++j) report[j] = grid[digits[j]];
    if (!search.Try(report, "grid")) return;
    more = false;
    for (int j = 0; j < m; ++j) {
      if (++digits[j] < g) {
        more = true;
        break;
      }
      digits[j] = 0;
    }
  }
  constexpr double kShifts[] = {-0.5, -0.1, -0.01, 0.01, 0.1, 0.5};
  for (int j = 0; j < m; ++j) {
    report.assign(truth_row.begin(), truth_row.end());
    for (double shift : kShifts) {
      report[j] = std::max(0.0, truth_row[j] + shift);
      if (!search.Try(report, "perturbation")) return;
    }
    for (double factor : {0.0, 2.0}) {
      report[j] = truth_row[j] * factor;
      if (!search.Try(report, "perturbation")) return;
    }
  }
  if (m <= kMaxPermutedItems) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (int j = 0; j < m; ++j) report[j] = truth_row[perm[j]];
      if (!search.Try(report, "permutation")) return;
    }
  }
}

void HillClimb(AgentSearch& search, std::span<const double> truth_row,
               const std::vector<double>& grid, RandomStream rng) {
  const int m = static_cast<int>(truth_row.size());
  std::vector<double> current(truth_row.begin(), truth_row.end());
  double current_u = search.truthful();
  for (std::uint64_t step = 1;; ++step) {
    std::vector<double> candidate = current;
    const int j = static_cast<int>(rng.NextBelow(m));
    if (rng.NextUniform() < 0.5) {
      candidate[j] = grid[rng.NextBelow(grid.size())];
    } else {
      candidate[j] = std::max(0.0, candidate[j] + (rng.NextUniform() - 0.5));
    }
    const std::optional<double> u = search.Try(candidate, "hill-climb");
    if (!u) return;
    if (*u >= current_u) {
      current = std::move(candidate);
      current_u = *u;
    }
    if (step % kRestartEvery == 0) {
      for (double& x : current) x = grid[rng.NextBelow(grid.size())];
      current_u = search.Evaluate(current);
    }
  }
}

std::vector<double> DeviatedRow(BicDeviation deviation,
                                std::span<const double> row, double scale,
                                RandomStream& rng) {
  std::vector<double> out(row.begin(), row.end());
  const int m = static_cast<int>(out.size());
  switch (deviation) {
    case BicDeviation::kTruthful:
      break;
    case BicDeviation::kSwapTopTwo: {
      if (m < 2) break;
      std::vector<int> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::partial_sort(order.begin(), order.begin() + 2, order.end(),
                        [&](int a, int b) {
                          return row[a] > row[b] || (row[a] == row[b] && a < b);
                        });
      std::swap(out[order[0]], out[order[1]]);
      break;
    }
    case BicDeviation::kRandomPermutation:
      for (int k = m - 1; k > 0; --k) {
        std::swap(out[k], out[rng.NextBelow(k + 1)]);
      }
      break;
    case BicDeviation::kScaleUp:
      for (double& x : out) x *= scale;
      break;
  }
  return out;
}

}  // namespace

double RealizedUtility(const MechanismSpec& spec, const ValuationMatrix& truth,
                       const ValuationMatrix& bids, int agent,
                       std::span<const DistributionSpec> dists) {
  const Allocation alloc = Allocate(spec, bids, dists);
  double u = 0.0;
  for (int j = 0; j < truth.items(); ++j) {
    if (alloc.owner(j) == agent) u += truth.at(agent, j);
  }
  return u;
}

DsicResult DsicAudit(const MechanismSpec& spec, const ValuationMatrix& values,
                     const DsicOptions& options,
                     std::span<const DistributionSpec> dists) {
  if (options.grid.empty()) throw std::invalid_argument("empty bid grid");
  if (options.search == DsicSearch::kExhaustiveGrid) {
    std::uint64_t vectors = 1;
    for (int j = 0; j < values.items(); ++j) {
      vectors *= options.grid.size();
      if (vectors > kMaxGridVectors) {
        throw std::length_error("exhaustive search limited to grid^m <= 1e6");
      }
    }
  }
  ValidateMechanism(spec, values.agents(), values.items(), dists);
  DsicResult result;
  for (int i = 0; i < values.agents(); ++i) {
    AgentSearch search(spec, values, dists, i, options);
    if (options.search == DsicSearch::kExhaustiveGrid) {
      ExhaustiveSearch(search, values.row(i), options.grid);
    } else {
      HillClimb(search, values.row(i), options.grid,
                RandomStream(options.seed, static_cast<std::uint64_t>(i)));
    }
    result.evaluations += search.evaluations();
    if (options.search == DsicSearch::kExhaustiveGrid && search.exhausted()) {
      result.partial = true;
    }
    if (search.best()) result.witnesses.push_back(*search.best());
  }
  return result;
}

std::string_view BicDeviationTag(BicDeviation deviation) {
  switch (deviation) {
    case BicDeviation::kTruthful:
      return "truthful";
    case BicDeviation::kSwapTopTwo:
      return "swap-top-two";
    case BicDeviation::kRandomPermutation:
      return "random-permutation";
    case BicDeviation::kScaleUp:
      return "scale-up";
  }
  return "unknown";
}

BicReport BicAudit(const MechanismSpec& spec,
                   std::span<const DistributionSpec> dists, int agents,
                   int items, const BicOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (options.deviator < 0 || options.deviator >= agents) {
    throw std::invalid_argument("deviator out of range");
  }
  ValidateMechanism(spec, agents, items, dists);
  const int d = static_cast<int>(options.deviations.size());
  // gains[t][k] for trial t and deviation k.
  const auto gains = RunIndexed(
      options.trials, options.workers, [&](int t) {
        RandomStream rng(options.seed, static_cast<std::uint64_t>(t));
        const ValuationMatrix truth =
            ValuationMatrix::Draw(agents, items, dists, rng);
        const double truthful =
            RealizedUtility(spec, truth, truth, options.deviator, dists);
        std::vector<double> row(d);
        for (int k = 0; k < d; ++k) {
          RandomStream dev_rng = rng.Substream(static_cast<std::uint64_t>(k));
          const std::vector<double> report =
              DeviatedRow(options.deviations[k], truth.row(options.deviator),
                          options.scale, dev_rng);
          row[k] = RealizedUtility(spec, truth,
                                   truth.WithRow(options.deviator, report),
                                   options.deviator, dists) -
                   truthful;
        }
        return row;
      });
  BicReport report;
  report.trials = options.trials;
  std::vector<double> column(options.trials);
  for (int k = 0; k < d; ++k) {
    for (int t = 0; t < options.trials; ++t) column[t] = gains[t][k];
    BicEstimate estimate{options.deviations[k], MeanInterval(column), false};
    estimate.violation = estimate.gain.low > 0.0;
    if (estimate.violation) report.passed = false;
    report.estimates.push_back(estimate);
  }
  return report;
}

}  // namespace fairstop
