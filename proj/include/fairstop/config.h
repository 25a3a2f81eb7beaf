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

#ifndef FAIRSTOP_CONFIG_H_
#define FAIRSTOP_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "fairstop/distribution.h"
#include "fairstop/mechanisms.h"

namespace fairstop {

enum class AuditKind { kWelfareRatio, kEnvy, kDsic, kBic, kPareto };

std::string_view AuditTag(AuditKind kind);
AuditKind ParseAudit(std::string_view tag);

struct ScenarioConfig {
  int agents = 2;
  int items = 1;
  // One shared distribution or one per agent.
  std::vector<DistributionSpec> distributions;
  MechanismSpec mechanism = Ranking{};
  int trials = 1;
  std::uint64_t seed = 1;
  int workers = 0;  // 0 means DefaultWorkers()
  std::vector<AuditKind> audits = {AuditKind::kWelfareRatio, AuditKind::kEnvy};
  std::string output;  // report path; empty means stdout
  double pareto_alpha = 1.0;
  int dsic_instances = 10;  // trials that get a DSIC audit
};

// Every violation found while parsing or validating a config.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

nlohmann::json DistributionToJson(const DistributionSpec& dist);
DistributionSpec DistributionFromJson(const nlohmann::json& doc);
nlohmann::json MechanismToJson(const MechanismSpec& spec);
MechanismSpec MechanismFromJson(const nlohmann::json& doc);

// Unknown keys are violations. Throws ConfigError.
ScenarioConfig ScenarioFromJson(const nlohmann::json& doc);
nlohmann::json ScenarioToJson(const ScenarioConfig& config);
ScenarioConfig LoadScenario(const std::string& path);

// Cross-field checks; throws ConfigError.
void ValidateScenario(const ScenarioConfig& config);

}  // namespace fairstop

#endif  // FAIRSTOP_CONFIG_H_
