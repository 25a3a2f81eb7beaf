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

#include "fairstop/welfare.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fairstop/mechanisms.h"
#include "fairstop/random.h"

namespace fairstop {
namespace {

using Owners = std::vector<int>;

// Direct enumeration of every owner vector with integer counters.
bool BruteForcePareto(const ValuationMatrix& v, const Allocation& alloc,
                      double alpha) {
  const int n = v.agents();
  const int m = v.items();
  std::vector<double> base(n, 0.0);
  for (int j = 0; j < m; ++j) base[alloc.owner(j)] += v.at(alloc.owner(j), j);
  long total = 1;
  for (int j = 0; j < m; ++j) total *= n;
  for (long code = 0; code < total; ++code) {
    std::vector<double> u(n, 0.0);
    long rest = code;
    for (int j = 0; j < m; ++j) {
      const int owner = static_cast<int>(rest % n);
      rest /= n;
      u[owner] += v.at(owner, j);
    }
    bool weak = true;
    bool strict = false;
    for (int i = 0; i < n; ++i) {
      const double target = base[i] / alpha;
      if (u[i] < target - 1e-12) weak = false;
      if (u[i] > target + 1e-12) strict = true;
    }
    if (weak && strict) return false;
  }
  return true;
}

ValuationMatrix Draw(int n, int m, const DistributionSpec& dist,
                     RandomStream& rng) {
  const DistributionSpec dists[] = {dist};
  return ValuationMatrix::Draw(n, m, dists, rng);
}

TEST(WelfareTest, SpotValues) {
  const ValuationMatrix v = {{3, 1, 2}, {1, 4, 1}};
  const Allocation alloc(2, Owners{0, 1, 1});
  EXPECT_DOUBLE_EQ(SocialWelfare(v, alloc), 3 + 4 + 1);
  EXPECT_DOUBLE_EQ(OptimalWelfare(v), 3 + 4 + 2);
}

TEST(WelfareTest, OptimalWelfareTracksExpectedMax) {
  RandomStream rng(2, 0);
  const auto uniform = DistributionSpec::Uniform(0.0, 1.0);
  EXPECT_NEAR(OptimalWelfare(Draw(2, 20'000, uniform, rng)) / 20'000,
              2.0 / 3.0, 0.01);
}

TEST(WelfareTest, AdversarialOptimalWelfarePerItem) {
  const auto adversarial = DistributionSpec::Adversarial(0.01, 0.0);
  const int m = 5000;
  const int trials = 200;
  double total = 0.0;
  for (int t = 0; t < trials; ++t) {
    RandomStream rng(41, t);
    total += OptimalWelfare(Draw(2, m, adversarial, rng)) / m;
  }
  EXPECT_NEAR(total / trials, 1.641, 0.01);
}

TEST(EnvyTest, MarginsAndVerdict) {
  const ValuationMatrix v = {{3, 1, 2}, {1, 4, 1}};
  const EnvyReport fair = EnvyCheck(v, Allocation(2, Owners{0, 1, 0}));
  EXPECT_TRUE(fair.envy_free);
  EXPECT_DOUBLE_EQ(fair.margins[0][1], 5 - 1);
  EXPECT_DOUBLE_EQ(fair.margins[1][0], 4 - 2);
  EXPECT_DOUBLE_EQ(fair.margins[0][0], 0.0);

  const EnvyReport unfair = EnvyCheck(v, Allocation(2, Owners{1, 0, 1}));
  EXPECT_FALSE(unfair.envy_free);
  EXPECT_DOUBLE_EQ(unfair.margins[0][1], 1 - 5);
  EXPECT_FALSE(IsEnvyFree(v, Allocation(2, Owners{1, 0, 1})));
}

TEST(EnvyTest, EqualBundlesAreEnvyFree) {
  const ValuationMatrix v = {{1, 1}, {2, 2}};
  EXPECT_TRUE(IsEnvyFree(v, Allocation(2, Owners{0, 1})));
}

TEST(ParetoTest, SpotExamples) {
  const ValuationMatrix v = {{1, 0}, {0, 1}};
  EXPECT_TRUE(ParetoCheck(v, Allocation(2, Owners{0, 1}), 1.0));
  EXPECT_FALSE(ParetoCheck(v, Allocation(2, Owners{1, 0}), 1.0));
  // Halving the bar still leaves (0, 0) dominated by (1, 1).
  EXPECT_FALSE(ParetoCheck(v, Allocation(2, Owners{1, 0}), 0.5));
  const ValuationMatrix w = {{2, 2}, {1, 1}};
  EXPECT_TRUE(ParetoCheck(w, Allocation(2, Owners{0, 1}), 1.0));
}

TEST(ParetoTest, MatchesBruteForce) {
  RandomStream rng(3, 0);
  const auto dist = DistributionSpec::BernoulliPlusNoise(0.4, 0.0);
  const auto smooth = DistributionSpec::Uniform(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng.NextBelow(2));
    const int m = 1 + static_cast<int>(rng.NextBelow(5));
    const ValuationMatrix v = Draw(n, m, trial % 2 ? dist : smooth, rng);
    Owners owners(m);
    for (int& o : owners) o = static_cast<int>(rng.NextBelow(n));
    const Allocation alloc(n, owners);
    for (double alpha : {0.5, 0.95, 1.0}) {
      EXPECT_EQ(ParetoCheck(v, alloc, alpha), BruteForcePareto(v, alloc, alpha))
          << "trial " << trial << " alpha " << alpha;
    }
  }
}

TEST(ParetoTest, WelfareMaxIsParetoOptimal) {
  RandomStream rng(4, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const ValuationMatrix v =
        Draw(3, 6, DistributionSpec::Uniform(0.0, 1.0), rng);
    EXPECT_TRUE(ParetoCheck(v, RunWelfareMax(v), 1.0));
  }
}

TEST(ParetoTest, RejectsOversizedInstances) {
  const ValuationMatrix v(4, 12);
  EXPECT_THROW(ParetoCheck(v, Allocation(4, 12), 1.0), std::length_error);
}

TEST(FairnessTest, WelfareMaxIsUsuallyEnvyFree) {
  RandomStream rng(5, 0);
  int envy_free = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const ValuationMatrix v =
        Draw(2, 2000, DistributionSpec::Uniform(0.0, 1.0), rng);
    envy_free += IsEnvyFree(v, RunWelfareMax(v));
  }
  EXPECT_GE(envy_free, 0.99 * trials);
}

TEST(FairnessTest, HalfSplitLeavesSecondPickerEnviousHalfTheTime) {
  RandomStream rng(6, 0);
  const std::vector<double> shares = {0.5, 0.5};
  int first_ok = 0;
  int both_ok = 0;
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    const ValuationMatrix v =
        Draw(2, 1000, DistributionSpec::Uniform(0.0, 1.0), rng);
    const EnvyReport r = EnvyCheck(v, RunPickR(shares, v));
    first_ok += r.margins[0][1] >= 0.0;
    both_ok += r.envy_free;
  }
  EXPECT_EQ(first_ok, trials);
  EXPECT_NEAR(static_cast<double>(both_ok) / trials, 0.5, 0.1);
}

TEST(FairnessTest, RelabelingPreservesAudits) {
  RandomStream rng(7, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3;
    const int m = 7;
    const ValuationMatrix v =
        Draw(n, m, DistributionSpec::Uniform(0.0, 1.0), rng);
    Owners owners(m);
    for (int& o : owners) o = static_cast<int>(rng.NextBelow(n));
    const Allocation alloc(n, owners);

    std::vector<int> agent_perm(n);
    std::vector<int> item_perm(m);
    std::iota(agent_perm.begin(), agent_perm.end(), 0);
    std::iota(item_perm.begin(), item_perm.end(), 0);
    std::shuffle(agent_perm.begin(), agent_perm.end(), rng.engine());
    std::shuffle(item_perm.begin(), item_perm.end(), rng.engine());

    ValuationMatrix pv(n, m);
    Owners powners(m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        pv.set(agent_perm[i], item_perm[j], v.at(i, j));
      }
    }
    for (int j = 0; j < m; ++j) powners[item_perm[j]] = agent_perm[owners[j]];
    const Allocation palloc(n, powners);

    EXPECT_NEAR(SocialWelfare(v, alloc), SocialWelfare(pv, palloc), 1e-12);
    EXPECT_NEAR(OptimalWelfare(v), OptimalWelfare(pv), 1e-12);
    EXPECT_EQ(IsEnvyFree(v, alloc), IsEnvyFree(pv, palloc));
    EXPECT_EQ(ParetoCheck(v, alloc, 1.0), ParetoCheck(pv, palloc, 1.0));
  }
}

}  // namespace
}  // namespace fairstop
