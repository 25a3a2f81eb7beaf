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

#include "fairstop/picking_exchange.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace fairstop {
namespace {

[[noreturn]] void Reject(const std::string& what) {
  throw std::invalid_argument("invalid picking-exchange: " + what);
}

void CheckPartition(std::span<const int> first, std::span<const int> second,
                    std::span<const int> universe, const char* what) {
  if (first.empty() || second.empty()) {
    Reject(std::string(what) + " endowments must both be nonempty");
  }
  std::vector<int> merged(first.begin(), first.end());
  merged.insert(merged.end(), second.begin(), second.end());
  std::sort(merged.begin(), merged.end());
  std::vector<int> expect(universe.begin(), universe.end());
  std::sort(expect.begin(), expect.end());
  if (merged != expect) {
    Reject(std::string(what) + " endowments do not partition the items");
  }
}

void Exchange(std::span<const int> first, std::span<const int> second,
              const ValuationMatrix& bids, Allocation& out) {
  const double a_keep = BundleValue(bids, 0, first);
  const double a_swap = BundleValue(bids, 0, second);
  const double b_keep = BundleValue(bids, 1, second);
  const double b_swap = BundleValue(bids, 1, first);
  // Indifference on either side means no trade.
  const bool trade = a_swap > a_keep && b_swap > b_keep;
  for (int j : first) out.assign(j, trade ? 1 : 0);
  for (int j : second) out.assign(j, trade ? 0 : 1);
}

}  // namespace

void ValidateComponent(const Component& c) {
  const int size = static_cast<int>(c.items.size());
  if (size == 0) Reject("empty component");
  auto check_picker = [](int picker) {
    if (picker != 0 && picker != 1) Reject("picker must be agent 0 or 1");
  };
  std::visit(
      [&](const auto& rule) {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, CardinalityMenu>) {
          check_picker(rule.picker);
          if (rule.count < 0 || rule.count > size) {
            Reject("cardinality outside [0, component size]");
          }
        } else if constexpr (std::is_same_v<T, ExplicitMenu>) {
          check_picker(rule.picker);
          if (size > kMaxExplicitMenuComponent) {
            Reject("explicit menus are limited to components of <= 3 items");
          }
          if (rule.entries.empty()) Reject("menu has no entries");
          for (const auto& entry : rule.entries) {
            for (int j : entry) {
              if (std::find(c.items.begin(), c.items.end(), j) ==
                  c.items.end()) {
                Reject("menu entry uses item " + std::to_string(j) +
                       " outside its component");
              }
            }
          }
        } else {
          CheckPartition(rule.first, rule.second, c.items, "exchange");
        }
      },
      c.rule);
}

void ValidateComponents(const std::vector<Component>& components, int items) {
  std::vector<int> seen(items, 0);
  for (const Component& c : components) {
    for (int j : c.items) {
      if (j < 0 || j >= items) Reject("item index out of range");
      if (seen[j]++) Reject("item " + std::to_string(j) + " in two components");
    }
    ValidateComponent(c);
  }
  for (int j = 0; j < items; ++j) {
    if (!seen[j]) Reject("item " + std::to_string(j) + " not covered");
  }
}

void AllocateComponent(const Component& c, const ValuationMatrix& bids,
                       Allocation& out) {
  std::visit(
      [&](const auto& rule) {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, CardinalityMenu>) {
          const int picker = rule.picker;
          std::vector<int> order = c.items;
          std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            const double va = bids.at(picker, a);
            const double vb = bids.at(picker, b);
            return va > vb || (va == vb && a < b);
          });
          for (std::size_t k = 0; k < order.size(); ++k) {
            out.assign(order[k], static_cast<int>(k) < rule.count
                                     ? picker
                                     : 1 - picker);
          }
        } else if constexpr (std::is_same_v<T, ExplicitMenu>) {
          const int picker = rule.picker;
          std::vector<int> best;
          double best_value = -1.0;
          for (const auto& entry : rule.entries) {
            std::vector<int> sorted = entry;
            std::sort(sorted.begin(), sorted.end());
            const double value = BundleValue(bids, picker, sorted);
            if (value > best_value || (value == best_value && sorted < best)) {
              best_value = value;
              best = std::move(sorted);
            }
          }
          for (int j : c.items) {
            const bool picked =
                std::binary_search(best.begin(), best.end(), j);
            out.assign(j, picked ? picker : 1 - picker);
          }
        } else {
          Exchange(rule.first, rule.second, bids, out);
        }
      },
      c.rule);
}

Allocation RunExchange(std::span<const int> first, std::span<const int> second,
                       const ValuationMatrix& bids) {
  if (bids.agents() != 2) Reject("exchange needs exactly two agents");
  std::vector<int> all(bids.items());
  for (int j = 0; j < bids.items(); ++j) all[j] = j;
  CheckPartition(first, second, all, "exchange");
  Allocation out(2, bids.items());
  Exchange(first, second, bids, out);
  return out;
}

Allocation RunPickingExchange(const std::vector<Component>& components,
                              const ValuationMatrix& bids) {
  if (bids.agents() != 2) Reject("picking-exchange needs exactly two agents");
  ValidateComponents(components, bids.items());
  Allocation out(2, bids.items());
  for (const Component& c : components) AllocateComponent(c, bids, out);
  return out;
}

}  // namespace fairstop
