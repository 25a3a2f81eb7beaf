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

#include "fairstop/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "fairstop/weights.h"

namespace fairstop {
namespace {

constexpr double kShareSumTolerance = 1e-9;
// Relative slack on m * prefix before flooring.
constexpr double kFloorSlack = 1e-9;

// Items ordered by descending bid, lowest index first among equal bids.
std::vector<int> PreferenceOrder(const ValuationMatrix& bids, int agent) {
  std::vector<int> order(bids.items());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return bids.at(agent, a) > bids.at(agent, b);
  });
  return order;
}

const DistributionSpec& DistFor(std::span<const DistributionSpec> dists,
                                int agent) {
  return dists.size() == 1 ? dists[0] : dists[agent];
}

void CheckDists(std::span<const DistributionSpec> dists, int agents,
                const char* who) {
  if (dists.empty() ||
      (dists.size() != 1 && static_cast<int>(dists.size()) != agents)) {
    throw std::invalid_argument(std::string(who) +
                                " needs one distribution or one per agent");
  }
}

}  // namespace

std::string_view MechanismTag(const MechanismSpec& spec) {
  return std::visit(
      [](const auto& m) -> std::string_view {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PickR>) return "pick-r";
        if constexpr (std::is_same_v<T, QtS>) return "qt-s";
        if constexpr (std::is_same_v<T, Exchange>) return "exchange";
        if constexpr (std::is_same_v<T, PickingExchange>) {
          return "picking-exchange";
        }
        if constexpr (std::is_same_v<T, Ranking>) return "ranking";
        if constexpr (std::is_same_v<T, WeightedRanking>) {
          return "weighted-ranking";
        }
        if constexpr (std::is_same_v<T, WelfareMax>) return "welfare-max";
        if constexpr (std::is_same_v<T, SerialDictator>) {
          return "serial-dictator";
        }
      },
      spec);
}

void ValidateShares(std::span<const double> shares) {
  if (shares.empty()) throw std::invalid_argument("share vector is empty");
  double total = 0.0;
  for (double r : shares) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("shares must be finite and nonnegative");
    }
    total += r;
  }
  if (std::abs(total - 1.0) > kShareSumTolerance) {
    throw std::invalid_argument("shares must sum to 1");
  }
}

void ValidateThresholds(std::span<const double> thresholds) {
  if (thresholds.empty()) throw std::invalid_argument("thresholds are empty");
  for (double s : thresholds) {
    if (!(s >= 0.0 && s <= 1.0)) {
      throw std::invalid_argument("thresholds must lie in [0, 1]");
    }
  }
  if (thresholds.back() != 1.0) {
    throw std::invalid_argument("last threshold must equal 1");
  }
}

std::vector<int> PickQuotas(std::span<const double> shares, int items) {
  ValidateShares(shares);
  if (items < 0) throw std::invalid_argument("negative item count");
  const int n = static_cast<int>(shares.size());
  std::vector<int> quotas(n);
  double prefix = 0.0;
  int taken = 0;
  for (int i = 0; i < n; ++i) {
    prefix += shares[i];
    const double scaled = items * prefix;
    int cumulative =
        i + 1 == n ? items
                   : static_cast<int>(std::floor(
                         scaled + kFloorSlack * std::max(1.0, scaled)));
    cumulative = std::clamp(cumulative, taken, items);
    quotas[i] = cumulative - taken;
    taken = cumulative;
  }
  return quotas;
}

std::vector<double> ThresholdsFromShares(std::span<const double> shares) {
  ValidateShares(shares);
  const int n = static_cast<int>(shares.size());
  std::vector<double> s(n, 1.0);
  double consumed = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const double remaining = 1.0 - consumed;
    s[i] = remaining > 0.0 ? std::clamp(shares[i] / remaining, 0.0, 1.0) : 1.0;
    consumed += shares[i];
  }
  s[n - 1] = 1.0;
  return s;
}

Allocation RunPickR(std::span<const double> shares,
                    const ValuationMatrix& bids) {
  const int n = bids.agents();
  if (static_cast<int>(shares.size()) != n) {
    throw std::invalid_argument("share vector length differs from agents");
  }
  const std::vector<int> quotas = PickQuotas(shares, bids.items());
  Allocation out(n, bids.items());
  std::vector<int> remaining(bids.items());
  std::iota(remaining.begin(), remaining.end(), 0);
  for (int i = 0; i < n; ++i) {
    const int take = quotas[i];
    auto better = [&](int a, int b) {
      const double va = bids.at(i, a);
      const double vb = bids.at(i, b);
      return va > vb || (va == vb && a < b);
    };
    if (take < static_cast<int>(remaining.size())) {
      std::nth_element(remaining.begin(), remaining.begin() + take,
                       remaining.end(), better);
    }
    for (int k = 0; k < take; ++k) out.assign(remaining[k], i);
    remaining.erase(remaining.begin(), remaining.begin() + take);
  }
  return out;
}

Allocation RunQtS(std::span<const double> thresholds,
                  std::span<const DistributionSpec> dists,
                  const ValuationMatrix& values) {
  const int n = values.agents();
  if (static_cast<int>(thresholds.size()) != n) {
    throw std::invalid_argument("threshold vector length differs from agents");
  }
  ValidateThresholds(thresholds);
  CheckDists(dists, n, "qt-s");
  Allocation out(n, values.items());
  for (int j = 0; j < values.items(); ++j) {
    int owner = n - 1;
    for (int i = 0; i + 1 < n; ++i) {
      if (DistFor(dists, i).Cdf(values.at(i, j)) >= 1.0 - thresholds[i]) {
        owner = i;
        break;
      }
    }
    out.assign(j, owner);
  }
  return out;
}

std::vector<std::vector<int>> ComputeRanks(const ValuationMatrix& bids) {
  std::vector<std::vector<int>> ranks(bids.agents(),
                                      std::vector<int>(bids.items()));
  for (int i = 0; i < bids.agents(); ++i) {
    const std::vector<int> order = PreferenceOrder(bids, i);
    for (int pos = 0; pos < bids.items(); ++pos) ranks[i][order[pos]] = pos + 1;
  }
  return ranks;
}

Allocation RunRanking(const ValuationMatrix& bids) {
  const auto ranks = ComputeRanks(bids);
  Allocation out(bids.agents(), bids.items());
  for (int j = 0; j < bids.items(); ++j) {
    int best = 0;
    for (int i = 1; i < bids.agents(); ++i) {
      if (ranks[i][j] < ranks[best][j]) best = i;
    }
    out.assign(j, best);
  }
  return out;
}

Allocation RunWeightedRanking(const ValuationMatrix& bids,
                              std::span<const DistributionSpec> dists,
                              std::span<const double> weights) {
  const int n = bids.agents();
  const int m = bids.items();
  CheckDists(dists, n, "weighted ranking");
  if (static_cast<int>(weights.size()) != n) {
    throw std::invalid_argument("weight vector length differs from agents");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("weights must be positive");
    }
  }
  // virtual_value[i][rank - 1] = w_i * F_i^{-1}(1 - rank / (m + 1)).
  std::vector<std::vector<double>> virtual_value(n, std::vector<double>(m));
  for (int i = 0; i < n; ++i) {
    for (int rank = 1; rank <= m; ++rank) {
      virtual_value[i][rank - 1] =
          weights[i] * DistFor(dists, i).InverseCdf(1.0 - rank / (m + 1.0));
    }
  }
  const auto ranks = ComputeRanks(bids);
  Allocation out(n, m);
  for (int j = 0; j < m; ++j) {
    int best = 0;
    double best_value = virtual_value[0][ranks[0][j] - 1];
    for (int i = 1; i < n; ++i) {
      const double v = virtual_value[i][ranks[i][j] - 1];
      if (v > best_value) {
        best = i;
        best_value = v;
      }
    }
    out.assign(j, best);
  }
  return out;
}

Allocation RunWelfareMax(const ValuationMatrix& bids) {
  Allocation out(bids.agents(), bids.items());
  for (int j = 0; j < bids.items(); ++j) {
    int best = 0;
    for (int i = 1; i < bids.agents(); ++i) {
      if (bids.at(i, j) > bids.at(best, j)) best = i;
    }
    out.assign(j, best);
  }
  return out;
}

Allocation RunSerialDictator(const ValuationMatrix& bids) {
  const int n = bids.agents();
  Allocation out(n, bids.items());
  for (int j = 0; j < bids.items(); ++j) {
    int owner = n - 1;
    for (int i = 0; i < n; ++i) {
      if (bids.at(i, j) > 0.0) {
        owner = i;
        break;
      }
    }
    out.assign(j, owner);
  }
  return out;
}

Allocation Allocate(const MechanismSpec& spec, const ValuationMatrix& bids,
                    std::span<const DistributionSpec> dists) {
  return std::visit(
      [&](const auto& m) -> Allocation {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PickR>) {
          return RunPickR(m.shares, bids);
        } else if constexpr (std::is_same_v<T, QtS>) {
          return RunQtS(m.thresholds, dists, bids);
        } else if constexpr (std::is_same_v<T, Exchange>) {
          return RunExchange(m.first, m.second, bids);
        } else if constexpr (std::is_same_v<T, PickingExchange>) {
          return RunPickingExchange(m.components, bids);
        } else if constexpr (std::is_same_v<T, Ranking>) {
          return RunRanking(bids);
        } else if constexpr (std::is_same_v<T, WeightedRanking>) {
          if (m.weights.empty()) {
            CheckDists(dists, bids.agents(), "weighted ranking");
            std::vector<DistributionSpec> per_agent;
            for (int i = 0; i < bids.agents(); ++i) {
              per_agent.push_back(DistFor(dists, i));
            }
            return RunWeightedRanking(bids, dists,
                                      SolveWeights(per_agent).weights);
          }
          return RunWeightedRanking(bids, dists, m.weights);
        } else if constexpr (std::is_same_v<T, WelfareMax>) {
          return RunWelfareMax(bids);
        } else {
          return RunSerialDictator(bids);
        }
      },
      spec);
}

void ValidateMechanism(const MechanismSpec& spec, int agents, int items,
                       std::span<const DistributionSpec> dists) {
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PickR>) {
          if (static_cast<int>(m.shares.size()) != agents) {
            throw std::invalid_argument("pick-r needs one share per agent");
          }
          ValidateShares(m.shares);
        } else if constexpr (std::is_same_v<T, QtS>) {
          if (static_cast<int>(m.thresholds.size()) != agents) {
            throw std::invalid_argument("qt-s needs one threshold per agent");
          }
          ValidateThresholds(m.thresholds);
          CheckDists(dists, agents, "qt-s");
        } else if constexpr (std::is_same_v<T, Exchange>) {
          if (agents != 2) throw std::invalid_argument("exchange needs n = 2");
          ValidateComponents({Component{[&] {
                                          std::vector<int> all(items);
                                          std::iota(all.begin(), all.end(), 0);
                                          return all;
                                        }(),
                                        ExchangeEndowment{m.first, m.second}}},
                             items);
        } else if constexpr (std::is_same_v<T, PickingExchange>) {
          if (agents != 2) {
            throw std::invalid_argument("picking-exchange needs n = 2");
          }
          ValidateComponents(m.components, items);
        } else if constexpr (std::is_same_v<T, WeightedRanking>) {
          CheckDists(dists, agents, "weighted ranking");
          if (!m.weights.empty() &&
              static_cast<int>(m.weights.size()) != agents) {
            throw std::invalid_argument("weighted ranking needs one weight "
                                        "per agent");
          }
        }
      },
      spec);
}

}  // namespace fairstop
