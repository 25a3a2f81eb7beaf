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

#ifndef FAIRSTOP_PICKING_EXCHANGE_H_
#define FAIRSTOP_PICKING_EXCHANGE_H_

#include <variant>
#include <vector>

#include "fairstop/valuation.h"

namespace fairstop {

// Explicit menus are only accepted on components of at most this many items;
// larger components use cardinality menus.
inline constexpr int kMaxExplicitMenuComponent = 3;

// Picker takes its `count` highest-bid items of the component (all subsets of
// a fixed cardinality); the other agent gets the rest.
struct CardinalityMenu {
  int picker = 0;
  int count = 0;
};

// Picker takes its bid-maximal entry; ties go to the lexicographically
// smallest sorted item list. Entries hold item indices from the component.
struct ExplicitMenu {
  int picker = 0;
  std::vector<std::vector<int>> entries;
};

// Agent 0 is endowed with `first`, agent 1 with `second`. The endowments
// swap iff both agents strictly prefer the other endowment.
struct ExchangeEndowment {
  std::vector<int> first;
  std::vector<int> second;
};

using ComponentRule = std::variant<CardinalityMenu, ExplicitMenu,
                                   ExchangeEndowment>;

struct Component {
  std::vector<int> items;
  ComponentRule rule;
};

// Two-agent exchange over all items of `bids`; `first` and `second` must
// partition [0, m).
Allocation RunExchange(std::span<const int> first, std::span<const int> second,
                       const ValuationMatrix& bids);

// Components must partition [0, m); each rule must be valid for its items.
Allocation RunPickingExchange(const std::vector<Component>& components,
                              const ValuationMatrix& bids);

// Throws std::invalid_argument describing the first violation.
void ValidateComponents(const std::vector<Component>& components, int items);
void ValidateComponent(const Component& component);

// Writes owners for the component's items only. No validation.
void AllocateComponent(const Component& component, const ValuationMatrix& bids,
                       Allocation& out);

}  // namespace fairstop

#endif  // FAIRSTOP_PICKING_EXCHANGE_H_
