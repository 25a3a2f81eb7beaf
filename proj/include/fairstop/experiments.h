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

#ifndef FAIRSTOP_EXPERIMENTS_H_
#define FAIRSTOP_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fairstop {

struct ExperimentCheck {
  std::string label;
  std::string observed;
  std::string expected;
  bool passed = false;
};

struct ExperimentResult {
  std::string name;
  std::vector<ExperimentCheck> checks;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_seconds = 0.0;

  bool passed() const;
  nlohmann::json ToJson() const;
};

struct ExperimentInfo {
  std::string name;
  int criterion = 0;  // acceptance criterion number, 0 for auxiliary entries
  std::string summary;
};

struct ExperimentOptions {
  std::optional<std::uint64_t> seed;
  // Scales the main Monte Carlo trial count; pinned values when unset.
  std::optional<int> trials;
  int workers = 1;
};

const std::vector<ExperimentInfo>& ExperimentRegistry();

// Throws std::out_of_range listing the registry for unknown names.
ExperimentResult RunExperiment(std::string_view name,
                               const ExperimentOptions& options = {});

}  // namespace fairstop

#endif  // FAIRSTOP_EXPERIMENTS_H_
