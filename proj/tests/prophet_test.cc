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

#include "fairstop/prophet.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fairstop/random.h"
#include "fairstop/statistics.h"

namespace fairstop {
namespace {

// Mean reward of a rule over independent draws, with its standard error.
Interval SimulatedReward(const StoppingRule& rule,
                         const DistributionSpec& dist, int trials,
                         std::uint64_t seed) {
  RandomStream rng(seed, 0);
  std::vector<double> draws(rule.horizon());
  std::vector<double> rewards;
  rewards.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    for (double& x : draws) x = dist.Sample(rng);
    rewards.push_back(RunQtp(rule, dist, draws).value);
  }
  return MeanInterval(rewards);
}

// Exact two-step ratio for the atomic adversarial law.
double AdversarialTwoStepRatio(double p) {
  const double a = 1.0 - kAdversarialQ;
  const double high = a / p;
  const double gambler = a + (1.0 - p);
  const double none_high = (1.0 - p) * (1.0 - p);
  const double all_zero = (a - p) * (a - p);
  const double prophet = high * (1.0 - none_high) + (none_high - all_zero);
  return gambler / prophet;
}

TEST(ProphetTest, QtpStopsAtFirstClearingStep) {
  const auto dist = DistributionSpec::Uniform(0.0, 1.0);
  const StoppingRule rule{{0.2, 0.5, 1.0}};
  const std::vector<double> a = {0.7, 0.6, 0.1};
  EXPECT_EQ(RunQtp(rule, dist, a).index, 1);
  EXPECT_DOUBLE_EQ(RunQtp(rule, dist, a).value, 0.6);
  const std::vector<double> b = {0.85, 0.9, 0.1};
  EXPECT_EQ(RunQtp(rule, dist, b).index, 0);
  const std::vector<double> c = {0.1, 0.2, 0.05};
  EXPECT_EQ(RunQtp(rule, dist, c).index, 2);
  const std::vector<double> short_draws = {0.1, 0.2};
  EXPECT_THROW(RunQtp(rule, dist, short_draws), std::invalid_argument);
}

TEST(ProphetTest, UniformDynamicProgramming) {
  const auto dist = DistributionSpec::Uniform(0.0, 1.0);
  const DpSolution two = DpOptimalValues(dist, 2);
  EXPECT_NEAR(two.values[0], 0.625, 1e-12);
  EXPECT_NEAR(two.values[1], 0.5, 1e-12);
  EXPECT_NEAR(two.accept_above[0], 0.5, 1e-12);
  // V <- (1 + V^2) / 2 for U[0, 1].
  const DpSolution three = DpOptimalValues(dist, 3);
  EXPECT_NEAR(three.values[0], (1.0 + 0.625 * 0.625) / 2.0, 1e-12);
  EXPECT_NEAR(three.values[0], 0.6953125, 1e-12);
  EXPECT_NEAR(OptimalRatio(dist, 2), 0.625 / (2.0 / 3.0), 1e-12);
  EXPECT_DOUBLE_EQ(OptimalRatio(dist, 1), 1.0);
  EXPECT_THROW(DpOptimalValues(dist, 0), std::invalid_argument);
}

TEST(ProphetTest, AdversarialRatioMatchesClosedForm) {
  const double limit = (1.0 + std::sqrt(2.0)) / (2.0 * std::sqrt(2.0));
  double previous = 1.0;
  for (double p : {0.05, 0.01, 0.002}) {
    const double ratio = OptimalRatio(DistributionSpec::Adversarial(p, 0.0), 2);
    EXPECT_NEAR(ratio, AdversarialTwoStepRatio(p), 1e-12) << p;
    EXPECT_GT(ratio, limit);
    EXPECT_LT(ratio, previous);
    previous = ratio;
  }
  EXPECT_NEAR(previous, limit, 2e-3);
}

TEST(ProphetTest, BestThresholdRuleAchievesDpValue) {
  const auto dist = DistributionSpec::Uniform(0.0, 1.0);
  const StoppingRule rule = BestThresholdRule(dist, 2);
  ASSERT_EQ(rule.horizon(), 2);
  EXPECT_NEAR(rule.thresholds[0], 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(rule.thresholds[1], 1.0);

  const auto bumpy = DistributionSpec::BernoulliPlusNoise(0.3, 0.5);
  const int n = 5;
  const double v1 = DpOptimalValues(bumpy, n).values[0];
  const Interval reward =
      SimulatedReward(BestThresholdRule(bumpy, n), bumpy, 200'000, 11);
  EXPECT_NEAR(reward.estimate, v1, 4.0 * reward.half_width() / kZ95);
}

TEST(ProphetTest, NoThresholdRuleBeatsDp) {
  const auto dist = DistributionSpec::Adversarial(0.05, 0.01);
  const int n = 4;
  const double v1 = DpOptimalValues(dist, n).values[0];
  RandomStream fuzz(5, 0);
  for (int k = 0; k < 20; ++k) {
    StoppingRule rule;
    for (int i = 0; i + 1 < n; ++i) rule.thresholds.push_back(fuzz.NextUniform());
    rule.thresholds.push_back(1.0);
    const Interval reward = SimulatedReward(rule, dist, 50'000, 100 + k);
    EXPECT_LE(reward.estimate, v1 + 4.0 * reward.half_width() / kZ95);
  }
}

TEST(ProphetTest, KertzIntegralMatchesMidpointRule) {
  // Substituting y = exp(-u) gives exp(-u) / (exp(-u) (1 + u) + g - 1).
  for (double g : {1.1, 1.3415, 2.0}) {
    const int cells = 600'000;
    const double h = 60.0 / cells;
    double total = 0.0;
    for (int k = 0; k < cells; ++k) {
      const double u = (k + 0.5) * h;
      const double e = std::exp(-u);
      total += e / (e * (1.0 + u) + g - 1.0);
    }
    EXPECT_NEAR(KertzIntegral(g), total * h, 1e-8) << g;
  }
  EXPECT_THROW(KertzIntegral(1.0), std::invalid_argument);
}

TEST(ProphetTest, BetaRoot) {
  const BetaSolution s = SolveBeta();
  EXPECT_LE(s.residual, 1e-8);
  EXPECT_NEAR(s.beta, 0.7454403321, 1e-8);
  EXPECT_GT(KertzIntegral(1.0 / 0.80), 1.0);
  EXPECT_LT(KertzIntegral(1.0 / 0.70), 1.0);
}

}  // namespace
}  // namespace fairstop
