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

#include "fairstop/valuation.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fairstop {

ValuationMatrix::ValuationMatrix(int agents, int items)
    : agents_(agents), items_(items) {
  if (agents < 1 || items < 1) {
    throw std::invalid_argument("valuation matrix needs n >= 1 and m >= 1");
  }
  values_.assign(static_cast<std::size_t>(agents) * items, 0.0);
}

ValuationMatrix::ValuationMatrix(
    std::initializer_list<std::initializer_list<double>> rows)
    : ValuationMatrix(std::vector<std::vector<double>>(rows.begin(),
                                                       rows.end())) {}

ValuationMatrix::ValuationMatrix(const std::vector<std::vector<double>>& rows)
    : ValuationMatrix(static_cast<int>(rows.size()),
                      rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int i = 0; i < agents_; ++i) {
    if (static_cast<int>(rows[i].size()) != items_) {
      throw std::invalid_argument("ragged valuation rows");
    }
    for (int j = 0; j < items_; ++j) set(i, j, rows[i][j]);
  }
}

ValuationMatrix ValuationMatrix::Draw(int agents, int items,
                                      std::span<const DistributionSpec> dists,
                                      RandomStream& rng) {
  if (dists.empty() ||
      (dists.size() != 1 && static_cast<int>(dists.size()) != agents)) {
    throw std::invalid_argument("need one distribution or one per agent");
  }
  ValuationMatrix v(agents, items);
  for (int i = 0; i < agents; ++i) {
    const DistributionSpec& d = dists.size() == 1 ? dists[0] : dists[i];
    for (int j = 0; j < items; ++j) {
      v.values_[static_cast<std::size_t>(i) * items + j] = d.Sample(rng);
    }
  }
  return v;
}

void ValuationMatrix::set(int agent, int item, double value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument("values must be finite and nonnegative");
  }
  values_[static_cast<std::size_t>(agent) * items_ + item] = value;
}

ValuationMatrix ValuationMatrix::WithRow(int agent,
                                         std::span<const double> report) const {
  if (static_cast<int>(report.size()) != items_) {
    throw std::invalid_argument("report length differs from item count");
  }
  ValuationMatrix copy = *this;
  for (int j = 0; j < items_; ++j) copy.set(agent, j, report[j]);
  return copy;
}

Allocation::Allocation(int agents, std::vector<int> owners)
    : agents_(agents), owners_(std::move(owners)) {
  if (agents < 1) throw std::invalid_argument("allocation needs n >= 1");
  for (int o : owners_) {
    if (o < 0 || o >= agents) {
      throw std::invalid_argument("owner index out of range: " +
                                  std::to_string(o));
    }
  }
}

Allocation::Allocation(int agents, int items)
    : Allocation(agents, std::vector<int>(items, 0)) {}

void Allocation::assign(int item, int agent) {
  if (agent < 0 || agent >= agents_) {
    throw std::invalid_argument("owner index out of range");
  }
  owners_[item] = agent;
}

std::vector<std::vector<int>> Allocation::Bundles() const {
  std::vector<std::vector<int>> bundles(agents_);
  for (int j = 0; j < items(); ++j) bundles[owners_[j]].push_back(j);
  return bundles;
}

std::vector<int> Allocation::Bundle(int agent) const {
  std::vector<int> out;
  for (int j = 0; j < items(); ++j) {
    if (owners_[j] == agent) out.push_back(j);
  }
  return out;
}

double BundleValue(const ValuationMatrix& values, int agent,
                   std::span<const int> items) {
  double total = 0.0;
  for (int j : items) total += values.at(agent, j);
  return total;
}

double ValueOfHolding(const ValuationMatrix& values, const Allocation& alloc,
                      int agent, int holder) {
  double total = 0.0;
  for (int j = 0; j < alloc.items(); ++j) {
    if (alloc.owner(j) == holder) total += values.at(agent, j);
  }
  return total;
}

}  // namespace fairstop
