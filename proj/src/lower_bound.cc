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

#include "fairstop/lower_bound.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <type_traits>

#include "fairstop/distribution.h"
#include "fairstop/parallel.h"
#include "fairstop/random.h"
#include "fairstop/valuation.h"
#include "fairstop/welfare.h"

namespace fairstop {
namespace {

constexpr int kBlocks = 64;

enum class RuleKind { kCardinality, kMenu, kExchange };

// One rule on one subset. Local masks index the subset's items in ascending
// order; `menu` is a bitmask over local masks.
struct Rule {
  RuleKind kind;
  int picker = 0;
  int count = 0;
  std::uint32_t menu = 0;
  std::uint32_t first = 0;
};

struct SubsetRules {
  std::vector<int> items;
  std::vector<Rule> rules;
  std::size_t offset = 0;  // first slot in the flat score array
};

// Position of each local mask in lexicographic order of sorted item lists.
std::vector<int> LexRanks(int size) {
  const int count = 1 << size;
  std::vector<std::vector<int>> lists(count);
  for (int mask = 0; mask < count; ++mask) {
    for (int k = 0; k < size; ++k) {
      if (mask >> k & 1) lists[mask].push_back(k);
    }
  }
  std::vector<int> order(count);
  for (int k = 0; k < count; ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lists[a] < lists[b]; });
  std::vector<int> rank(count);
  for (int k = 0; k < count; ++k) rank[order[k]] = k;
  return rank;
}

std::vector<Rule> RulesFor(int size) {
  std::vector<Rule> rules;
  for (int count = 0; count <= size; ++count) {
    rules.push_back({RuleKind::kCardinality, 0, count});
  }
  for (int count = 1; count < size; ++count) {
    rules.push_back({RuleKind::kCardinality, 1, count});
  }
  if (size <= kMaxExplicitMenuComponent) {
    const std::uint32_t menus = (1u << (1 << size)) - 1;
    for (int picker = 0; picker < 2; ++picker) {
      for (std::uint32_t menu = 1; menu <= menus; ++menu) {
        rules.push_back({RuleKind::kMenu, picker, 0, menu});
      }
    }
  }
  const std::uint32_t full = (1u << size) - 1;
  for (std::uint32_t first = 1; first < full; ++first) {
    rules.push_back({RuleKind::kExchange, 0, 0, 0, first});
  }
  return rules;
}

Component ToComponent(const SubsetRules& subset, const Rule& rule) {
  auto global = [&](std::uint32_t local) {
    std::vector<int> items;
    for (std::size_t k = 0; k < subset.items.size(); ++k) {
      if (local >> k & 1) items.push_back(subset.items[k]);
    }
    return items;
  };
  const std::uint32_t full = (1u << subset.items.size()) - 1;
  switch (rule.kind) {
    case RuleKind::kCardinality:
      return {subset.items, CardinalityMenu{rule.picker, rule.count}};
    case RuleKind::kMenu: {
      ExplicitMenu menu{rule.picker, {}};
      for (std::uint32_t local = 0; local <= full; ++local) {
        if (rule.menu >> local & 1) menu.entries.push_back(global(local));
      }
      return {subset.items, menu};
    }
    case RuleKind::kExchange:
      return {subset.items,
              ExchangeEndowment{global(rule.first), global(full & ~rule.first)}};
  }
  return {};
}

// Scores every rule of `subset` on one instance, adding welfare into `sums`.
class SubsetScorer {
 public:
  explicit SubsetScorer(int size)
      : size_(size),
        lex_(LexRanks(size)),
        value_{std::vector<double>(1 << size), std::vector<double>(1 << size)},
        order_{std::vector<int>(size), std::vector<int>(size)} {}

  void Score(const SubsetRules& subset, const ValuationMatrix& v,
             double* sums) {
    const int count = 1 << size_;
    for (int a = 0; a < 2; ++a) {
      for (int mask = 0; mask < count; ++mask) {
        double total = 0.0;
        for (int k = 0; k < size_; ++k) {
          if (mask >> k & 1) total += v.at(a, subset.items[k]);
        }
        value_[a][mask] = total;
      }
      for (int k = 0; k < size_; ++k) order_[a][k] = k;
      std::stable_sort(order_[a].begin(), order_[a].end(), [&](int x, int y) {
        return v.at(a, subset.items[x]) > v.at(a, subset.items[y]);
      });
    }
    const std::uint32_t full = static_cast<std::uint32_t>(count - 1);
    auto welfare = [&](int picker, std::uint32_t taken) {
      return value_[picker][taken] + value_[1 - picker][full & ~taken];
    };
    for (std::size_t r = 0; r < subset.rules.size(); ++r) {
      const Rule& rule = subset.rules[r];
      double w = 0.0;
      switch (rule.kind) {
        case RuleKind::kCardinality: {
          std::uint32_t taken = 0;
          for (int k = 0; k < rule.count; ++k) {
            taken |= 1u << order_[rule.picker][k];
          }
          w = welfare(rule.picker, taken);
          break;
        }
        case RuleKind::kMenu: {
          int best = -1;
          for (std::uint32_t bits = rule.menu; bits != 0; bits &= bits - 1) {
            const int entry = std::countr_zero(bits);
            if (best < 0 ||
                value_[rule.picker][entry] > value_[rule.picker][best] ||
                (value_[rule.picker][entry] == value_[rule.picker][best] &&
                 lex_[entry] < lex_[best])) {
              best = entry;
            }
          }
          w = welfare(rule.picker, static_cast<std::uint32_t>(best));
          break;
        }
        case RuleKind::kExchange: {
          const std::uint32_t second = full & ~rule.first;
          const bool trade = value_[0][second] > value_[0][rule.first] &&
                             value_[1][rule.first] > value_[1][second];
          w = trade ? welfare(0, second) : welfare(0, rule.first);
          break;
        }
      }
      sums[r] += w;
    }
  }

 private:
  int size_;
  std::vector<int> lex_;
  std::vector<double> value_[2];
  std::vector<int> order_[2];
};

// Best total over partitions of `mask`, given a best score per subset.
FamilyBest BestPartition(const std::vector<SubsetRules>& subsets,
                         const std::vector<double>& means, double optimal,
                         bool allow_exchange, std::uint64_t& candidates) {
  const int count = static_cast<int>(subsets.size());
  std::vector<double> single(count, -1.0);
  std::vector<int> single_rule(count, -1);
  for (int mask = 1; mask < count; ++mask) {
    const SubsetRules& s = subsets[mask];
    for (std::size_t r = 0; r < s.rules.size(); ++r) {
      if (!allow_exchange && s.rules[r].kind == RuleKind::kExchange) continue;
      ++candidates;
      if (means[s.offset + r] > single[mask]) {
        single[mask] = means[s.offset + r];
        single_rule[mask] = static_cast<int>(r);
      }
    }
  }
  std::vector<double> best(count, 0.0);
  std::vector<int> head(count, 0);
  for (int mask = 1; mask < count; ++mask) {
    const int low = mask & -mask;
    best[mask] = -1.0;
    for (int sub = mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      const double total = single[sub] + best[mask & ~sub];
      if (total > best[mask]) {
        best[mask] = total;
        head[mask] = sub;
      }
    }
  }
  FamilyBest out;
  out.ratio = best[count - 1] / optimal;
  for (int mask = count - 1; mask > 0; mask &= ~head[mask]) {
    const int sub = head[mask];
    out.components.push_back(
        ToComponent(subsets[sub], subsets[sub].rules[single_rule[sub]]));
  }
  out.description = DescribeComponents(out.components);
  return out;
}

}  // namespace

std::string DescribeComponents(const std::vector<Component>& components) {
  std::ostringstream os;
  auto set = [&](const std::vector<int>& items) {
    os << '{';
    for (std::size_t k = 0; k < items.size(); ++k) {
      os << (k ? "," : "") << items[k];
    }
    os << '}';
  };
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (c) os << "; ";
    set(components[c].items);
    os << ": ";
    std::visit(
        [&](const auto& rule) {
          using T = std::decay_t<decltype(rule)>;
          if constexpr (std::is_same_v<T, CardinalityMenu>) {
            os << "agent " << rule.picker << " picks " << rule.count;
          } else if constexpr (std::is_same_v<T, ExplicitMenu>) {
            os << "agent " << rule.picker << " picks from menu [";
            for (std::size_t k = 0; k < rule.entries.size(); ++k) {
              if (k) os << ' ';
              set(rule.entries[k]);
            }
            os << ']';
          } else {
            os << "exchange ";
            set(rule.first);
            os << " for ";
            set(rule.second);
          }
        },
        components[c].rule);
  }
  return os.str();
}

LowerBoundAuditResult TwoAgentLowerBoundAudit(
    const LowerBoundAuditOptions& options) {
  if (options.items < 1 || options.items > kMaxAuditItems) {
    throw std::length_error("lower-bound audit supports 1..6 items");
  }
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const DistributionSpec dist =
      DistributionSpec::Adversarial(options.p, options.delta);
  const int m = options.items;
  const int count = 1 << m;

  std::vector<SubsetRules> subsets(count);
  std::size_t slots = 0;
  for (int mask = 1; mask < count; ++mask) {
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1) subsets[mask].items.push_back(j);
    }
    subsets[mask].rules = RulesFor(std::popcount(static_cast<unsigned>(mask)));
    subsets[mask].offset = slots;
    slots += subsets[mask].rules.size();
  }

  // Fixed trial blocks keep the summation order independent of workers.
  const int blocks = std::min(kBlocks, options.trials);
  struct BlockSums {
    std::vector<double> rules;
    double optimal = 0.0;
  };
  const auto partial = RunIndexed(blocks, options.workers, [&](int b) {
    BlockSums sums{std::vector<double>(slots, 0.0), 0.0};
    std::vector<SubsetScorer> scorers;
    for (int size = 0; size <= m; ++size) scorers.emplace_back(size);
    const DistributionSpec dists[] = {dist};
    const long begin = static_cast<long>(options.trials) * b / blocks;
    const long end = static_cast<long>(options.trials) * (b + 1) / blocks;
    for (long t = begin; t < end; ++t) {
      RandomStream rng(options.seed, static_cast<std::uint64_t>(t));
      const ValuationMatrix v = ValuationMatrix::Draw(2, m, dists, rng);
      sums.optimal += OptimalWelfare(v);
      for (int mask = 1; mask < count; ++mask) {
        const SubsetRules& s = subsets[mask];
        scorers[s.items.size()].Score(s, v, sums.rules.data() + s.offset);
      }
    }
    return sums;
  });

  std::vector<double> means(slots, 0.0);
  double optimal = 0.0;
  for (const BlockSums& block : partial) {
    optimal += block.optimal;
    for (std::size_t k = 0; k < slots; ++k) means[k] += block.rules[k];
  }
  for (double& x : means) x /= options.trials;
  optimal /= options.trials;

  LowerBoundAuditResult result;
  result.optimal_welfare = optimal;
  std::uint64_t ignored = 0;
  result.picking_only = BestPartition(subsets, means, optimal, false, ignored);
  result.with_exchange =
      BestPartition(subsets, means, optimal, true, result.candidates);
  return result;
}

}  // namespace fairstop
