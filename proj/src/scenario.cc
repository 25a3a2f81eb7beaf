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

#include <chrono>
#include <iomanip>
#include <limits>

#include "fairstop/mechanisms.h"
#include "fairstop/parallel.h"
#include "fairstop/random.h"
#include "fairstop/valuation.h"
#include "fairstop/weights.h"
#include "fairstop/welfare.h"

namespace fairstop {
namespace {

using nlohmann::json;

constexpr std::uint64_t kDsicSubstream = 1;
constexpr int kDsicExamples = 3;
constexpr std::uint64_t kHillClimbBudget = 20'000;

json IntervalJson(const Interval& i) {
  return {{"estimate", i.estimate}, {"ci_low", i.low}, {"ci_high", i.high}};
}

json DeviationJson(const DeviationReport& d) {
  return {{"agent", d.agent},       {"misreport", d.misreport},
          {"truthful", d.truthful}, {"deviation", d.deviation},
          {"gain", d.gain},         {"method", d.method}};
}

MechanismSpec ResolveMechanism(const ScenarioConfig& config,
                               std::vector<double>& solved) {
  if (const auto* m = std::get_if<WeightedRanking>(&config.mechanism)) {
    if (m->weights.empty()) {
      solved = SolveWeights(config.distributions).weights;
      return WeightedRanking{solved};
    }
  }
  return config.mechanism;
}

struct TrialOutcome {
  TrialRecord record;
  std::optional<DsicResult> dsic;
};

}  // namespace

json SummaryReport::ToJson(bool include_elapsed) const {
  json echo = ScenarioToJson(config);
  echo.erase("workers");
  echo.erase("output");
  json audits = json::object();
  if (welfare) {
    audits["welfare-ratio"] = IntervalJson(welfare->ratio);
    audits["welfare-ratio"]["mechanism_mean"] = welfare->mechanism_mean;
    audits["welfare-ratio"]["optimal_mean"] = welfare->optimal_mean;
  }
  if (envy_free) audits["envy"] = IntervalJson(*envy_free);
  if (pareto) {
    audits["pareto"] = IntervalJson(*pareto);
    audits["pareto"]["alpha"] = config.pareto_alpha;
  }
  if (dsic) {
    json examples = json::array();
    for (const auto& d : dsic->examples) examples.push_back(DeviationJson(d));
    audits["dsic"] = {{"instances", dsic->instances},
                      {"witnesses", dsic->witnesses},
                      {"partial", dsic->partial},
                      {"examples", examples}};
  }
  if (bic) {
    json rows = json::array();
    for (const auto& e : bic->estimates) {
      json row = IntervalJson(e.gain);
      row["deviation"] = BicDeviationTag(e.deviation);
      row["violation"] = e.violation;
      rows.push_back(row);
    }
    audits["bic"] = {{"trials", bic->trials},
                     {"passed", bic->passed},
                     {"deviations", rows}};
  }
  json out = {{"version", FAIRSTOP_VERSION},
              {"seed", config.seed},
              {"trials", config.trials},
              {"config", echo},
              {"audits", audits}};
  if (!solved_weights.empty()) out["solved_weights"] = solved_weights;
  if (include_elapsed) out["elapsed_seconds"] = elapsed_seconds;
  return out;
}

SummaryReport RunScenario(const ScenarioConfig& config) {
  ValidateScenario(config);
  const auto start = std::chrono::steady_clock::now();
  SummaryReport report;
  report.config = config;
  const MechanismSpec mechanism =
      ResolveMechanism(config, report.solved_weights);
  auto wants = [&](AuditKind kind) {
    for (AuditKind a : config.audits) {
      if (a == kind) return true;
    }
    return false;
  };
  const bool want_pareto = wants(AuditKind::kPareto);
  const bool want_dsic = wants(AuditKind::kDsic);
  const int workers = config.workers > 0 ? config.workers : DefaultWorkers();
  const std::span<const DistributionSpec> dists = config.distributions;

  const auto outcomes = RunIndexed(config.trials, workers, [&](int t) {
    RandomStream rng(config.seed, static_cast<std::uint64_t>(t));
    const ValuationMatrix values =
        ValuationMatrix::Draw(config.agents, config.items, dists, rng);
    const Allocation alloc = Allocate(mechanism, values, dists);
    TrialOutcome out;
    out.record = {t, static_cast<std::uint64_t>(t), SocialWelfare(values, alloc),
                  OptimalWelfare(values), IsEnvyFree(values, alloc),
                  std::nullopt};
    if (want_pareto) {
      out.record.pareto = ParetoCheck(values, alloc, config.pareto_alpha);
    }
    if (want_dsic && t < config.dsic_instances) {
      DsicOptions options;
      std::uint64_t vectors = 1;
      for (int j = 0; j < config.items && vectors <= 1'000'000; ++j) {
        vectors *= options.grid.size();
      }
      if (vectors > 1'000'000) {
        options.search = DsicSearch::kHillClimb;
        options.budget = kHillClimbBudget;
        options.seed = rng.Substream(kDsicSubstream).engine()();
      }
      out.dsic = DsicAudit(mechanism, values, options, dists);
    }
    return out;
  });

  std::vector<double> welfare(config.trials);
  std::vector<double> optimal(config.trials);
  std::int64_t envy_free = 0;
  std::int64_t pareto = 0;
  for (int t = 0; t < config.trials; ++t) {
    const TrialRecord& r = outcomes[t].record;
    report.trials.push_back(r);
    welfare[t] = r.welfare;
    optimal[t] = r.optimal_welfare;
    envy_free += r.envy_free;
    pareto += r.pareto.value_or(false);
  }
  if (wants(AuditKind::kWelfareRatio)) {
    WelfareSummary w;
    w.ratio = RatioInterval(welfare, optimal);
    w.mechanism_mean = MeanInterval(welfare).estimate;
    w.optimal_mean = MeanInterval(optimal).estimate;
    report.welfare = w;
  }
  if (wants(AuditKind::kEnvy)) {
    report.envy_free = WilsonInterval(envy_free, config.trials);
  }
  if (want_pareto) report.pareto = WilsonInterval(pareto, config.trials);
  if (want_dsic) {
    DsicSummary d;
    for (const auto& o : outcomes) {
      if (!o.dsic) continue;
      ++d.instances;
      d.partial = d.partial || o.dsic->partial;
      d.witnesses += static_cast<int>(o.dsic->witnesses.size());
      for (const auto& w : o.dsic->witnesses) {
        if (static_cast<int>(d.examples.size()) < kDsicExamples) {
          d.examples.push_back(w);
        }
      }
    }
    report.dsic = d;
  }
  if (wants(AuditKind::kBic)) {
    BicOptions options;
    options.trials = config.trials;
    options.seed = config.seed;
    options.workers = workers;
    report.bic = BicAudit(mechanism, dists, config.agents, config.items,
                          options);
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

void WriteTrialTable(std::ostream& out, const SummaryReport& report) {
  out << "trial,seed,stream,welfare,optimal_welfare,envy_free,pareto\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const TrialRecord& r : report.trials) {
    out << r.trial << ',' << report.config.seed << ',' << r.stream << ','
        << r.welfare << ',' << r.optimal_welfare << ',' << r.envy_free << ','
        << (r.pareto ? (*r.pareto ? "1" : "0") : "") << '\n';
  }
}

}  // namespace fairstop
