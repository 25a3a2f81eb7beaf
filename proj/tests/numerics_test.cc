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

#include "fairstop/numerics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace fairstop {
namespace {

TEST(NumericsTest, SimpsonIsExactOnCubics) {
  auto cubic = [](double x) { return 2.0 * x * x * x - x + 1.0; };
  EXPECT_NEAR(AdaptiveSimpson(cubic, 0.0, 2.0), 8.0 - 2.0 + 2.0, 1e-12);
}

TEST(NumericsTest, SimpsonOnSmoothFunction) {
  EXPECT_NEAR(AdaptiveSimpson([](double x) { return std::exp(-x); }, 0.0, 5.0),
              1.0 - std::exp(-5.0), 1e-9);
  EXPECT_NEAR(AdaptiveSimpson([](double x) { return std::sin(x); }, 0.0,
                              M_PI, 1e-12),
              2.0, 1e-11);
}

TEST(NumericsTest, PiecewiseHandlesJumps) {
  // Step of height 1 at x = 0.3 on [0, 1]: integral 0.7.
  auto step = [](double x) { return x < 0.3 ? 0.0 : 1.0; };
  const std::vector<double> breaks = {0.3};
  EXPECT_NEAR(IntegratePiecewise(step, 0.0, 1.0, breaks), 0.7, 1e-12);
}

TEST(NumericsTest, PiecewiseIgnoresBreaksOutsideInterval) {
  auto f = [](double x) { return std::abs(x - 0.5); };
  const std::vector<double> breaks = {-1.0, 0.5, 0.5, 4.0};
  EXPECT_NEAR(IntegratePiecewise(f, 0.0, 1.0, breaks), 0.25, 1e-12);
}

TEST(NumericsTest, EmptyIntervalIsZero) {
  EXPECT_EQ(AdaptiveSimpson([](double) { return 1.0; }, 1.0, 1.0), 0.0);
}

}  // namespace
}  // namespace fairstop
