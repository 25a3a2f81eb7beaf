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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fairstop/config.h"
#include "fairstop/experiments.h"
#include "fairstop/parallel.h"
#include "fairstop/prophet.h"
#include "fairstop/scenario.h"

namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<int> workers;
  std::string out;
  std::string format = "report";
};

void AddCommonFlags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Master seed override");
  cmd->add_option("--trials", flags.trials, "Trial count override")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--workers", flags.workers,
                  "Worker threads (default: FAIRSTOP_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", flags.out, "Write output to this path");
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"report", "table"}));
}

// Writes to `path`, or stdout when empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

fairstop::ScenarioConfig LoadWithOverrides(const std::string& path,
                                           const CommonFlags& flags) {
  fairstop::ScenarioConfig config = fairstop::LoadScenario(path);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.trials) config.trials = *flags.trials;
  if (flags.workers) config.workers = *flags.workers;
  return config;
}

std::string RenderScenario(const fairstop::SummaryReport& report,
                           const std::string& format) {
  if (format == "table") {
    std::ostringstream os;
    fairstop::WriteTrialTable(os, report);
    return os.str();
  }
  return report.ToJson().dump(2) + "\n";
}

std::string RenderExperiment(const fairstop::ExperimentResult& result,
                             const std::string& format) {
  if (format == "report") return result.ToJson().dump(2) + "\n";
  std::ostringstream os;
  for (const auto& c : result.checks) {
    os << (c.passed ? "PASS  " : "FAIL  ") << c.label << ": " << c.observed
       << " (expected " << c.expected << ")\n";
  }
  os << result.name << ": " << (result.passed() ? "PASS" : "FAIL") << " in "
     << std::fixed << std::setprecision(1) << result.elapsed_seconds << " s\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truthful fair-division and prophet-inequality simulator"};
  app.set_version_flag("--version", std::string(FAIRSTOP_VERSION));
  app.require_subcommand(1);

  CommonFlags flags;
  std::string config_path;
  std::string experiment_name;

  auto* run = app.add_subcommand("run", "Run a scenario config");
  run->add_option("config", config_path, "Scenario JSON file")->required();
  AddCommonFlags(run, flags);

  auto* experiment =
      app.add_subcommand("experiment", "Run a registered experiment");
  experiment->add_option("name", experiment_name, "Registry key")->required();
  AddCommonFlags(experiment, flags);

  auto* list = app.add_subcommand("list-experiments", "List registry keys");

  auto* beta = app.add_subcommand("beta", "Solve for the prophet constant");

  auto* audit = app.add_subcommand(
      "audit-dsic", "Search misreports on a scenario's first instances");
  audit->add_option("config", config_path, "Scenario JSON file")->required();
  AddCommonFlags(audit, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      const fairstop::ScenarioConfig config =
          LoadWithOverrides(config_path, flags);
      const fairstop::SummaryReport report = fairstop::RunScenario(config);
      const std::string path = flags.out.empty() ? config.output : flags.out;
      Emit(path, RenderScenario(report, flags.format));
      return 0;
    }
    if (*experiment) {
      fairstop::ExperimentOptions options;
      options.seed = flags.seed;
      options.trials = flags.trials;
      options.workers = flags.workers.value_or(fairstop::DefaultWorkers());
      const fairstop::ExperimentResult result =
          fairstop::RunExperiment(experiment_name, options);
      Emit(flags.out, RenderExperiment(result, flags.format));
      return result.passed() ? 0 : 1;
    }
    if (*list) {
      for (const auto& info : fairstop::ExperimentRegistry()) {
        std::cout << std::left << std::setw(26) << info.name;
        if (info.criterion > 0) {
          std::cout << "[" << std::setw(2) << info.criterion << "] ";
        } else {
          std::cout << "     ";
        }
        std::cout << info.summary << "\n";
      }
      return 0;
    }
    if (*beta) {
      const fairstop::BetaSolution solution = fairstop::SolveBeta();
      std::cout << std::setprecision(12) << "beta " << solution.beta
                << "\nresidual " << std::setprecision(3) << solution.residual
                << "\n";
      return 0;
    }
    if (*audit) {
      fairstop::ScenarioConfig config = LoadWithOverrides(config_path, flags);
      config.audits = {fairstop::AuditKind::kDsic};
      config.dsic_instances = std::min(config.dsic_instances, config.trials);
      config.trials = std::max(1, config.dsic_instances);
      const fairstop::SummaryReport report = fairstop::RunScenario(config);
      Emit(flags.out, report.ToJson().dump(2) + "\n");
      return report.dsic && report.dsic->witnesses == 0 ? 0 : 1;
    }
  } catch (const fairstop::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
