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

#ifndef FAIRSTOP_VALUATION_H_
#define FAIRSTOP_VALUATION_H_

#include <initializer_list>
#include <span>
#include <vector>

#include "fairstop/distribution.h"
#include "fairstop/random.h"

namespace fairstop {

// n x m table of nonnegative finite values (or bids). Row i is agent i.
class ValuationMatrix {
 public:
  ValuationMatrix(int agents, int items);
  // Rows must share one length; throws std::invalid_argument otherwise.
  ValuationMatrix(std::initializer_list<std::initializer_list<double>> rows);
  explicit ValuationMatrix(const std::vector<std::vector<double>>& rows);

  // v[i][j] ~ dists[i] (or dists[0] for every agent when only one is given).
  static ValuationMatrix Draw(int agents, int items,
                              std::span<const DistributionSpec> dists,
                              RandomStream& rng);

  int agents() const { return agents_; }
  int items() const { return items_; }

  double at(int agent, int item) const {
    return values_[static_cast<std::size_t>(agent) * items_ + item];
  }
  // Checked write: rejects negative or non-finite entries.
  void set(int agent, int item, double value);

  std::span<const double> row(int agent) const {
    return {values_.data() + static_cast<std::size_t>(agent) * items_,
            static_cast<std::size_t>(items_)};
  }
  // Copy with agent's row replaced by `report`.
  ValuationMatrix WithRow(int agent, std::span<const double> report) const;

 private:
  int agents_;
  int items_;
  std::vector<double> values_;
};

// Total map from items to agents.
class Allocation {
 public:
  Allocation(int agents, std::vector<int> owners);
  // Every item initially owned by agent 0.
  Allocation(int agents, int items);

  int agents() const { return agents_; }
  int items() const { return static_cast<int>(owners_.size()); }
  int owner(int item) const { return owners_[item]; }
  void assign(int item, int agent);
  const std::vector<int>& owners() const { return owners_; }

  std::vector<std::vector<int>> Bundles() const;
  std::vector<int> Bundle(int agent) const;

  bool operator==(const Allocation&) const = default;

 private:
  int agents_;
  std::vector<int> owners_;
};

// Agent's additive value for a set of items.
double BundleValue(const ValuationMatrix& values, int agent,
                   std::span<const int> items);
// Agent's value for the bundle the allocation gives `holder`.
double ValueOfHolding(const ValuationMatrix& values, const Allocation& alloc,
                      int agent, int holder);

}  // namespace fairstop

#endif  // FAIRSTOP_VALUATION_H_
