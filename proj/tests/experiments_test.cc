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

#include "fairstop/experiments.h"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <string>

namespace fairstop {
namespace {

TEST(ExperimentsTest, RegistryCoversEachCriterionOnce) {
  std::set<int> criteria;
  std::set<std::string> names;
  for (const auto& info : ExperimentRegistry()) {
    EXPECT_TRUE(names.insert(info.name).second) << info.name;
    EXPECT_FALSE(info.summary.empty());
    if (info.criterion > 0) {
      EXPECT_TRUE(criteria.insert(info.criterion).second) << info.criterion;
    }
  }
  EXPECT_EQ(criteria.size(), 12u);
  EXPECT_EQ(*criteria.begin(), 1);
  EXPECT_EQ(*criteria.rbegin(), 12);
}

TEST(ExperimentsTest, UnknownNameListsRegistry) {
  try {
    RunExperiment("no-such-experiment");
    FAIL() << "expected std::out_of_range";
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("split-bounds"), std::string::npos);
  }
}

TEST(ExperimentsTest, SplitBoundsPasses) {
  const ExperimentResult r = RunExperiment("split-bounds");
  EXPECT_EQ(r.name, "split-bounds");
  EXPECT_FALSE(r.checks.empty());
  EXPECT_TRUE(r.passed());
  const auto doc = r.ToJson();
  EXPECT_EQ(doc["experiment"], "split-bounds");
  EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(ExperimentsTest, ResultIsDeterministicInSeed) {
  ExperimentOptions options;
  options.seed = 5;
  options.trials = 200;
  const auto a = RunExperiment("coupling-bound", options).ToJson();
  options.workers = 2;
  const auto b = RunExperiment("coupling-bound", options).ToJson();
  EXPECT_EQ(a["checks"], b["checks"]);
  EXPECT_EQ(a["details"], b["details"]);
}

}  // namespace
}  // namespace fairstop
