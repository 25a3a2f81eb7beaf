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

#ifndef FAIRSTOP_SCENARIO_H_
#define FAIRSTOP_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "fairstop/config.h"
#include "fairstop/incentives.h"
#include "fairstop/statistics.h"

namespace fairstop {

struct TrialRecord {
  int trial = 0;
  std::uint64_t stream = 0;
  double welfare = 0.0;
  double optimal_welfare = 0.0;
  bool envy_free = false;
  std::optional<bool> pareto;  // set when the pareto audit ran
};

struct WelfareSummary {
  Interval ratio;
  double mechanism_mean = 0.0;
  double optimal_mean = 0.0;
};

struct DsicSummary {
  int instances = 0;
  int witnesses = 0;
  bool partial = false;
  std::vector<DeviationReport> examples;  // at most a few
};

struct SummaryReport {
  ScenarioConfig config;
  std::optional<WelfareSummary> welfare;
  std::optional<Interval> envy_free;  // frequency with Wilson interval
  std::optional<Interval> pareto;
  std::optional<DsicSummary> dsic;
  std::optional<BicReport> bic;
  std::vector<double> solved_weights;  // weighted ranking without weights
  std::vector<TrialRecord> trials;
  double elapsed_seconds = 0.0;

  // Everything but elapsed time is a pure function of (config, version).
  nlohmann::json ToJson(bool include_elapsed = true) const;
};

// Trial k draws from RandomStream(seed, k); audits inside a trial use
// substreams. Results do not depend on the worker count.
SummaryReport RunScenario(const ScenarioConfig& config);

// CSV with header trial,seed,stream,welfare,optimal_welfare,envy_free,pareto.
void WriteTrialTable(std::ostream& out, const SummaryReport& report);

}  // namespace fairstop

#endif  // FAIRSTOP_SCENARIO_H_
