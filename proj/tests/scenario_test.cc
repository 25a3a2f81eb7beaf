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

#include "fairstop/scenario.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "fairstop/two_agent.h"

namespace fairstop {
namespace {

ScenarioConfig SmallScenario() {
  ScenarioConfig c;
  c.agents = 2;
  c.items = 4;
  c.distributions = {DistributionSpec::Uniform(0.0, 1.0)};
  c.mechanism = PickR{{0.5, 0.5}};
  c.trials = 40;
  c.seed = 17;
  c.workers = 1;
  c.audits = {AuditKind::kWelfareRatio, AuditKind::kEnvy, AuditKind::kPareto,
              AuditKind::kDsic};
  c.dsic_instances = 3;
  return c;
}

TEST(ScenarioTest, RerunsAreBitIdentical) {
  const ScenarioConfig c = SmallScenario();
  EXPECT_EQ(RunScenario(c).ToJson(false).dump(),
            RunScenario(c).ToJson(false).dump());
}

TEST(ScenarioTest, WorkerCountDoesNotChangeReport) {
  ScenarioConfig c = SmallScenario();
  c.audits.push_back(AuditKind::kBic);
  const std::string one = RunScenario(c).ToJson(false).dump();
  c.workers = 4;
  EXPECT_EQ(RunScenario(c).ToJson(false).dump(), one);
}

TEST(ScenarioTest, SeedChangesDraws) {
  ScenarioConfig c = SmallScenario();
  const SummaryReport a = RunScenario(c);
  c.seed = 18;
  const SummaryReport b = RunScenario(c);
  EXPECT_NE(a.trials[0].welfare, b.trials[0].welfare);
}

TEST(ScenarioTest, AuditsPopulateReport) {
  const SummaryReport r = RunScenario(SmallScenario());
  ASSERT_TRUE(r.welfare.has_value());
  ASSERT_TRUE(r.envy_free.has_value());
  ASSERT_TRUE(r.pareto.has_value());
  ASSERT_TRUE(r.dsic.has_value());
  EXPECT_FALSE(r.bic.has_value());
  EXPECT_EQ(r.dsic->instances, 3);
  EXPECT_EQ(r.dsic->witnesses, 0);
  ASSERT_EQ(r.trials.size(), 40u);
  for (const auto& t : r.trials) {
    EXPECT_LE(t.welfare, t.optimal_welfare + 1e-12);
    EXPECT_TRUE(t.pareto.has_value());
  }
  const auto doc = r.ToJson(false);
  EXPECT_FALSE(doc.contains("elapsed_seconds"));
  EXPECT_FALSE(doc["config"].contains("workers"));
}

TEST(ScenarioTest, TrialTableHasHeaderAndRows) {
  const SummaryReport r = RunScenario(SmallScenario());
  std::ostringstream out;
  WriteTrialTable(out, r);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line,
            "trial,seed,stream,welfare,optimal_welfare,envy_free,pareto");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 40);
}

TEST(ScenarioTest, TwoAgentWelfareMatchesClosedForm) {
  // Agent 0 keeps its top r fraction, worth (1 - c^2) / 2 per item with
  // c = 1 - r; agent 1 keeps the rest at mean 1/2. The optimum is 2/3.
  const double c = 1.0 - kTwoAgentShare;
  const double expected = ((1.0 - c * c) / 2.0 + c / 2.0) / (2.0 / 3.0);
  ScenarioConfig config = SmallScenario();
  config.items = 4000;
  config.trials = 50;
  config.mechanism = PickR{{kTwoAgentShare, 1.0 - kTwoAgentShare}};
  config.audits = {AuditKind::kWelfareRatio};
  const SummaryReport r = RunScenario(config);
  ASSERT_TRUE(r.welfare.has_value());
  EXPECT_NEAR(r.welfare->ratio.estimate, expected, 0.003);
  EXPECT_NEAR(expected, 0.9053, 1e-4);
}

TEST(ScenarioTest, WeightedRankingSolvesWeights) {
  ScenarioConfig c = SmallScenario();
  c.distributions = {DistributionSpec::Uniform(0.0, 1.0),
                     DistributionSpec::Uniform(0.0, 2.0)};
  c.mechanism = WeightedRanking{};
  c.audits = {AuditKind::kWelfareRatio};
  const SummaryReport r = RunScenario(c);
  ASSERT_EQ(r.solved_weights.size(), 2u);
  EXPECT_NEAR(r.solved_weights[1], 0.5, 1e-9);
}

}  // namespace
}  // namespace fairstop
