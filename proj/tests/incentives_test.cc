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

#include "fairstop/incentives.h"

#include <gtest/gtest.h>

#include <vector>

#include "fairstop/random.h"

namespace fairstop {
namespace {

const DeviationReport* WitnessFor(const DsicResult& result, int agent) {
  for (const auto& w : result.witnesses) {
    if (w.agent == agent) return &w;
  }
  return nullptr;
}

ValuationMatrix Draw(int n, int m, RandomStream& rng) {
  const DistributionSpec dists[] = {DistributionSpec::Uniform(0.0, 1.0)};
  return ValuationMatrix::Draw(n, m, dists, rng);
}

TEST(RealizedUtilityTest, UsesTrueValues) {
  const ValuationMatrix truth = {{0.6, 0.4}, {0.5, 0.5}};
  const ValuationMatrix bids = {{0.6, 0.4}, {1.0, 1.0}};
  EXPECT_DOUBLE_EQ(RealizedUtility(WelfareMax{}, truth, truth, 1), 0.5);
  EXPECT_DOUBLE_EQ(RealizedUtility(WelfareMax{}, truth, bids, 1), 1.0);
  EXPECT_DOUBLE_EQ(RealizedUtility(WelfareMax{}, truth, bids, 0), 0.0);
}

TEST(DsicAuditTest, WelfareMaxHasWitness) {
  const ValuationMatrix v = {{0.6, 0.4}, {0.5, 0.5}};
  const DsicResult result = DsicAudit(WelfareMax{}, v);
  ASSERT_FALSE(result.clean());
  const DeviationReport* w = WitnessFor(result, 1);
  ASSERT_NE(w, nullptr);
  EXPECT_NEAR(w->gain, 0.5, 1e-12);
  EXPECT_NEAR(w->truthful, 0.5, 1e-12);
  EXPECT_NEAR(RealizedUtility(WelfareMax{}, v, v.WithRow(1, w->misreport), 1),
              w->deviation, 1e-12);
  EXPECT_FALSE(result.partial);
}

TEST(DsicAuditTest, RankingHasWitness) {
  // Identical orders hand both items to agent 0 on ties; agent 1 wins item 1
  // by ranking it first.
  const ValuationMatrix v = {{1.0, 0.9}, {0.5, 0.4}};
  const DsicResult result = DsicAudit(Ranking{}, v);
  const DeviationReport* w = WitnessFor(result, 1);
  ASSERT_NE(w, nullptr);
  EXPECT_NEAR(w->gain, 0.4, 1e-12);
}

TEST(DsicAuditTest, PickingMechanismsAreClean) {
  RandomStream rng(1, 0);
  const std::vector<MechanismSpec> specs = {
      PickR{{0.3, 0.7}},
      PickR{{0.5, 0.5}},
      Exchange{{0, 2}, {1}},
      PickingExchange{{{{0}, ExplicitMenu{1, {{}, {0}}}},
                       {{1, 2}, CardinalityMenu{0, 1}}}},
      SerialDictator{},
  };
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 20; ++trial) {
      const ValuationMatrix v = Draw(2, 3, rng);
      const DsicResult result = DsicAudit(spec, v);
      EXPECT_TRUE(result.clean())
          << MechanismTag(spec) << " gain " << result.witnesses[0].gain;
      EXPECT_GT(result.evaluations, 0u);
    }
  }
}

TEST(DsicAuditTest, HillClimbFindsWelfareMaxWitness) {
  const ValuationMatrix v = {{0.6, 0.4}, {0.5, 0.5}};
  DsicOptions options;
  options.search = DsicSearch::kHillClimb;
  options.budget = 5000;
  options.seed = 3;
  const DsicResult result = DsicAudit(WelfareMax{}, v, options);
  EXPECT_FALSE(result.clean());
}

TEST(DsicAuditTest, SmallBudgetIsPartial) {
  RandomStream rng(2, 0);
  const ValuationMatrix v = Draw(2, 4, rng);
  DsicOptions options;
  options.budget = 10;
  const DsicResult result = DsicAudit(PickR{{0.5, 0.5}}, v, options);
  EXPECT_TRUE(result.partial);
  EXPECT_LE(result.evaluations, 20u);
}

TEST(DsicAuditTest, OversizedGridThrows) {
  const ValuationMatrix v(2, 9);
  EXPECT_THROW(DsicAudit(PickR{{0.5, 0.5}}, v), std::length_error);
}

TEST(BicAuditTest, TruthfulArmIsExactlyZero) {
  const DistributionSpec dists[] = {DistributionSpec::Uniform(0.0, 1.0)};
  BicOptions options;
  options.trials = 500;
  options.deviations = {BicDeviation::kTruthful};
  const BicReport report = BicAudit(Ranking{}, dists, 2, 10, options);
  ASSERT_EQ(report.estimates.size(), 1u);
  EXPECT_EQ(report.estimates[0].gain.estimate, 0.0);
  EXPECT_EQ(report.estimates[0].gain.low, 0.0);
  EXPECT_EQ(report.estimates[0].gain.high, 0.0);
  EXPECT_TRUE(report.passed);
}

TEST(BicAuditTest, WelfareMaxRewardsOverbidding) {
  const DistributionSpec dists[] = {DistributionSpec::Uniform(0.0, 1.0)};
  BicOptions options;
  options.trials = 2000;
  options.deviations = {BicDeviation::kScaleUp};
  const BicReport report = BicAudit(WelfareMax{}, dists, 2, 10, options);
  EXPECT_TRUE(report.estimates[0].violation);
  EXPECT_GT(report.estimates[0].gain.low, 0.0);
  EXPECT_FALSE(report.passed);
}

TEST(BicAuditTest, RankingPermutationLoses) {
  const DistributionSpec dists[] = {DistributionSpec::Uniform(0.0, 1.0)};
  BicOptions options;
  options.trials = 2000;
  const BicReport report = BicAudit(Ranking{}, dists, 2, 20, options);
  ASSERT_EQ(report.estimates.size(), 4u);
  EXPECT_LT(report.estimates[2].gain.high, 0.0);
  EXPECT_EQ(report.estimates[3].gain.estimate, 0.0);
  EXPECT_TRUE(report.passed);
}

TEST(BicAuditTest, WorkerCountDoesNotChangeResult) {
  const DistributionSpec dists[] = {DistributionSpec::Uniform(0.0, 1.0)};
  BicOptions options;
  options.trials = 300;
  const BicReport one = BicAudit(Ranking{}, dists, 3, 8, options);
  options.workers = 4;
  const BicReport four = BicAudit(Ranking{}, dists, 3, 8, options);
  for (std::size_t k = 0; k < one.estimates.size(); ++k) {
    EXPECT_EQ(one.estimates[k].gain.estimate, four.estimates[k].gain.estimate);
  }
}

}  // namespace
}  // namespace fairstop
