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

#include "fairstop/validators.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace fairstop {
namespace {

std::uint64_t Choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// E|r - h/2| from integer counts over C(2s, h) draws.
double ExactHypergeometric(int s, int h) {
  double total = 0.0;
  for (int r = 0; r <= h; ++r) {
    const double ways = static_cast<double>(Choose(s, r) * Choose(s, h - r));
    total += ways * std::abs(r - h / 2.0);
  }
  return total / static_cast<double>(Choose(2 * s, h));
}

double ExactBinomial(int h) {
  double total = 0.0;
  for (int r = 0; r <= h; ++r) {
    total += static_cast<double>(Choose(h, r)) * std::abs(r - h / 2.0);
  }
  return total / std::ldexp(1.0, h);
}

TEST(AbsDeviationTest, SpotValues) {
  EXPECT_NEAR(BinomialAbsDeviation(2), 0.5, 1e-14);
  EXPECT_NEAR(BinomialAbsDeviation(3), 0.75, 1e-14);
  EXPECT_NEAR(HypergeometricAbsDeviation(2, 2), 1.0 / 3.0, 1e-14);
}

TEST(AbsDeviationTest, MatchesIntegerOracle) {
  for (int s = 1; s <= 15; ++s) {
    for (int h = 2; h <= 2 * s; ++h) {
      EXPECT_NEAR(HypergeometricAbsDeviation(s, h), ExactHypergeometric(s, h),
                  1e-12)
          << s << " " << h;
    }
  }
  for (int h = 2; h <= 40; ++h) {
    EXPECT_NEAR(BinomialAbsDeviation(h), ExactBinomial(h), 1e-12) << h;
  }
}

TEST(AbsDeviationTest, BoundHoldsOverRange) {
  for (int s = 1; s <= 60; ++s) {
    for (int h = 2; h <= 2 * s; ++h) {
      EXPECT_TRUE(AbsDeviationBoundCheck(s, h)) << s << " " << h;
    }
  }
  EXPECT_THROW(AbsDeviationBoundCheck(2, 5), std::invalid_argument);
  EXPECT_THROW(AbsDeviationBoundCheck(2, 1), std::invalid_argument);
}

TEST(EnvyMarginTest, ExactSpotValues) {
  const double r = (2.0 - std::sqrt(2.0)) / 2.0;
  EXPECT_NEAR(EnvyMarginS(0.0), (3.0 + 2.0 * r) / 4.0 - 0.875, 1e-15);
  EXPECT_NEAR(EnvyMarginS(0.0), (5.0 - std::sqrt(2.0)) / 4.0 - 0.875, 1e-15);
  EXPECT_NEAR(EnvyMarginS(0.5),
              (2.5 + 2.0 * r) / 4.0 - 0.875 * 0.75, 1e-15);
  EXPECT_NEAR(EnvyMarginS(1.0), 0.0, 1e-15);
  const double t = 0.9;
  EXPECT_NEAR(EnvyMarginS(t), (7.0 - 7.0 * t) / 4.0 - 0.875 * (1 - t * t),
              1e-15);
}

TEST(EnvyMarginTest, NonnegativeOnGrid) {
  EXPECT_TRUE(EnvyMarginSCheck(1000));
  EXPECT_TRUE(EnvyMarginSCheck(100'000));
  EXPECT_THROW(EnvyMarginSCheck(999), std::invalid_argument);
  EXPECT_THROW(EnvyMarginS(1.5), std::invalid_argument);
}

TEST(CouplingTest, DegenerateCases) {
  const auto dist = DistributionSpec::Uniform(0.0, 1.0);
  EXPECT_EQ(CouplingDivergence(std::vector<double>{1.0}, dist, 500, 1), 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int d =
        CouplingDivergence(std::vector<double>{0.5, 0.5}, dist, 1, seed);
    EXPECT_TRUE(d == 0 || d == 1);
  }
}

TEST(CouplingTest, DivergenceIsSmallFraction) {
  const auto dist = DistributionSpec::Uniform(0.0, 1.0);
  const int m = 20'000;
  const int d =
      CouplingDivergence(std::vector<double>{0.3, 0.3, 0.4}, dist, m, 7);
  EXPECT_LT(d, 0.05 * m);
  EXPECT_EQ(d, CouplingDivergence(std::vector<double>{0.3, 0.3, 0.4}, dist,
                                  m, 7));
}

}  // namespace
}  // namespace fairstop
