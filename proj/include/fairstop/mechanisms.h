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

#ifndef FAIRSTOP_MECHANISMS_H_
#define FAIRSTOP_MECHANISMS_H_

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "fairstop/distribution.h"
#include "fairstop/picking_exchange.h"
#include "fairstop/valuation.h"

namespace fairstop {

// Quota serial dictatorship with shares r (r_i >= 0, sum 1).
struct PickR {
  std::vector<double> shares;
};
// Quantile thresholds s with s_n = 1.
struct QtS {
  std::vector<double> thresholds;
};
struct Exchange {
  std::vector<int> first;
  std::vector<int> second;
};
struct PickingExchange {
  std::vector<Component> components;
};
struct Ranking {};
// Empty weights means "solve from the distributions".
struct WeightedRanking {
  std::vector<double> weights;
};
struct WelfareMax {};
// Each item goes to the first agent (in index order) with a positive bid;
// unwanted items go to the last agent.
struct SerialDictator {};

using MechanismSpec = std::variant<PickR, QtS, Exchange, PickingExchange,
                                   Ranking, WeightedRanking, WelfareMax,
                                   SerialDictator>;

std::string_view MechanismTag(const MechanismSpec& spec);

// Quotas t_i = floor(m * R_i) - floor(m * R_{i-1}) over prefix sums R.
std::vector<int> PickQuotas(std::span<const double> shares, int items);
void ValidateShares(std::span<const double> shares);
void ValidateThresholds(std::span<const double> thresholds);
// s_i = r_i / (1 - sum_{k<i} r_k), with s_n pinned to 1.
std::vector<double> ThresholdsFromShares(std::span<const double> shares);

// Lowest item index wins ties within an agent's ranking.
Allocation RunPickR(std::span<const double> shares, const ValuationMatrix& bids);
// Quantiles are taken under dists[i] (or dists[0] for all agents).
Allocation RunQtS(std::span<const double> thresholds,
                  std::span<const DistributionSpec> dists,
                  const ValuationMatrix& values);
Allocation RunRanking(const ValuationMatrix& bids);
Allocation RunWeightedRanking(const ValuationMatrix& bids,
                              std::span<const DistributionSpec> dists,
                              std::span<const double> weights);
Allocation RunWelfareMax(const ValuationMatrix& bids);
Allocation RunSerialDictator(const ValuationMatrix& bids);

// ranks[i][j] = 1-based position of item j in agent i's descending order.
std::vector<std::vector<int>> ComputeRanks(const ValuationMatrix& bids);

// Dispatches on the spec. `dists` feeds QT-s and weighted ranking and may
// be empty for the ordinal mechanisms.
Allocation Allocate(const MechanismSpec& spec, const ValuationMatrix& bids,
                    std::span<const DistributionSpec> dists = {});

// Structural checks against an n x m instance.
void ValidateMechanism(const MechanismSpec& spec, int agents, int items,
                       std::span<const DistributionSpec> dists = {});

}  // namespace fairstop

#endif  // FAIRSTOP_MECHANISMS_H_
