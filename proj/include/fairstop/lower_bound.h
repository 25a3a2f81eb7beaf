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

#ifndef FAIRSTOP_LOWER_BOUND_H_
#define FAIRSTOP_LOWER_BOUND_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fairstop/picking_exchange.h"

namespace fairstop {

inline constexpr int kMaxAuditItems = 6;

struct LowerBoundAuditOptions {
  double p = 0.01;
  double delta = 0.0;
  int items = 4;
  int trials = 100'000;
  std::uint64_t seed = 31;
  int workers = 1;
};

struct FamilyBest {
  double ratio = 0.0;
  std::vector<Component> components;
  std::string description;
};

struct LowerBoundAuditResult {
  double optimal_welfare = 0.0;  // mean over the shared instances
  // Components restricted to picking menus and fixed allocations.
  FamilyBest picking_only;
  // Any mix of picking menus and exchanges.
  FamilyBest with_exchange;
  std::uint64_t candidates = 0;  // (item subset, rule) pairs evaluated

  double best_ratio() const { return with_exchange.ratio; }
};

// Two agents with adversarial values. Every item subset is scored under
// every rule: fixed allocations, cardinality menus, explicit menus (subsets
// of at most kMaxExplicitMenuComponent items) and all exchange endowments.
// The best partition of the items into scored components is then found
// exactly. Throws std::length_error above kMaxAuditItems items.
LowerBoundAuditResult TwoAgentLowerBoundAudit(
    const LowerBoundAuditOptions& options);

// Human-readable rule list such as "{0,1}: agent 0 picks 1".
std::string DescribeComponents(const std::vector<Component>& components);

}  // namespace fairstop

#endif  // FAIRSTOP_LOWER_BOUND_H_
