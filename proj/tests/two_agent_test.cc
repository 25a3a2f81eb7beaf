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

#include "fairstop/two_agent.h"

#include <gtest/gtest.h>

#include <cmath>

namespace fairstop {
namespace {

// Midpoint rule over [0, hi] with many cells; independent of the library's
// quadrature.
double RiemannA(const DistributionSpec& dist, double r, int cells = 400'000) {
  const double h = dist.hi() / cells;
  double total = 0.0;
  for (int k = 0; k < cells; ++k) {
    const double s = (k + 0.5) * h;
    total += r - std::abs(dist.Cdf(s) - (1.0 - r));
  }
  return total * h;
}

DistributionSpec TwoAtomLike() {
  return DistributionSpec::PiecewiseLinearCdf({0.0, 0.01, 0.99, 1.0},
                                              {0.0, 0.707, 0.707, 1.0});
}

TEST(TwoAgentTest, ShareConstant) {
  EXPECT_NEAR(kTwoAgentShare, (2.0 - std::sqrt(2.0)) / 2.0, 1e-16);
}

TEST(TwoAgentTest, UniformBoundaryIsZero) {
  // With c = 1 - r, the integral is r - (c^2 + (1 - c)^2) / 2, which
  // vanishes at c = sqrt(2)/2.
  const double c = 1.0 - kTwoAgentShare;
  const double closed = kTwoAgentShare - (c * c + (1 - c) * (1 - c)) / 2.0;
  EXPECT_NEAR(closed, 0.0, 1e-15);
  EXPECT_NEAR(IntegralConditionA(DistributionSpec::Uniform(0.0, 1.0),
                                 kTwoAgentShare),
              0.0, 1e-9);
}

TEST(TwoAgentTest, NarrowUniformIsNegative) {
  // Below 0.9 the integrand is 2r - 1; on [0.9, 1] it integrates to zero by
  // the uniform case rescaled.
  const double closed = (2.0 * kTwoAgentShare - 1.0) * 0.9;
  const double a =
      IntegralConditionA(DistributionSpec::Uniform(0.9, 1.0), kTwoAgentShare);
  EXPECT_NEAR(a, closed, 1e-9);
  EXPECT_NEAR(a, -0.373, 5e-4);
}

TEST(TwoAgentTest, TwoAtomLikeIsPositive) {
  const double a = IntegralConditionA(TwoAtomLike(), kTwoAgentShare);
  EXPECT_GT(a, 0.1);
  EXPECT_NEAR(a, RiemannA(TwoAtomLike(), kTwoAgentShare), 1e-6);
}

TEST(TwoAgentTest, MatchesRiemannOracle) {
  const DistributionSpec dists[] = {
      DistributionSpec::Uniform(0.0, 1.0),
      DistributionSpec::Uniform(0.3, 2.0),
      DistributionSpec::BernoulliPlusNoise(0.4, 0.3),
      DistributionSpec::Adversarial(0.05, 0.01),
      TwoAtomLike(),
  };
  for (const auto& dist : dists) {
    for (double r : {0.1, kTwoAgentShare, 0.45, 0.7}) {
      EXPECT_NEAR(IntegralConditionA(dist, r), RiemannA(dist, r),
                  1e-5 * std::max(1.0, dist.hi()))
          << dist.Describe() << " r=" << r;
    }
  }
}

TEST(TwoAgentTest, RejectsShareOutsideOpenInterval) {
  const auto dist = DistributionSpec::Uniform(0.0, 1.0);
  EXPECT_THROW(IntegralConditionA(dist, 0.0), std::invalid_argument);
  EXPECT_THROW(IntegralConditionA(dist, 1.0), std::invalid_argument);
}

TEST(TwoAgentTest, SelectorBranches) {
  const TwoAgentChoice atoms = SelectTwoAgentR(TwoAtomLike(), 4000);
  EXPECT_TRUE(atoms.ef_condition_holds);
  EXPECT_DOUBLE_EQ(atoms.share, kTwoAgentShare);

  const TwoAgentChoice narrow =
      SelectTwoAgentR(DistributionSpec::Uniform(0.9, 1.0), 10'000);
  EXPECT_FALSE(narrow.ef_condition_holds);
  EXPECT_NEAR(narrow.share, 0.4, 1e-12);

  const TwoAgentChoice boundary =
      SelectTwoAgentR(DistributionSpec::Uniform(0.0, 1.0), 4000);
  EXPECT_FALSE(boundary.ef_condition_holds);
  EXPECT_NEAR(boundary.share, 0.5 - std::pow(4000.0, -0.25), 1e-12);
  EXPECT_FALSE(boundary.below_asymptotic_regime);
}

TEST(TwoAgentTest, SmallMClampsShare) {
  const TwoAgentChoice small =
      SelectTwoAgentR(DistributionSpec::Uniform(0.0, 1.0), 16);
  EXPECT_TRUE(small.below_asymptotic_regime);
  EXPECT_DOUBLE_EQ(small.share, 1.0 / 16);
  EXPECT_FALSE(
      SelectTwoAgentR(DistributionSpec::Uniform(0.0, 1.0), 17)
          .below_asymptotic_regime);
}

}  // namespace
}  // namespace fairstop
