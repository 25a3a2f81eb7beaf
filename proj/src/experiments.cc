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

#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fairstop/config.h"
#include "fairstop/distribution.h"
#include "fairstop/incentives.h"
#include "fairstop/lower_bound.h"
#include "fairstop/mechanisms.h"
#include "fairstop/parallel.h"
#include "fairstop/prophet.h"
#include "fairstop/random.h"
#include "fairstop/scenario.h"
#include "fairstop/statistics.h"
#include "fairstop/two_agent.h"
#include "fairstop/validators.h"
#include "fairstop/weights.h"
#include "fairstop/welfare.h"

namespace fairstop {
namespace {

using nlohmann::json;

// (2 + sqrt(2)) / 4
constexpr double kTwoAgentBound = 0.85355339059327373;
constexpr double kTwoAgentRatioFloor = kTwoAgentBound - 0.01;

std::string Fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

std::string FmtInterval(const Interval& i, int digits = 5) {
  return Fmt(i.estimate, digits) + " [" + Fmt(i.low, digits) + ", " +
         Fmt(i.high, digits) + "]";
}

class Context {
 public:
  Context(const ExperimentOptions& options, std::uint64_t default_seed)
      : options_(options), seed_(options.seed.value_or(default_seed)) {}

  std::uint64_t seed() const { return seed_; }
  int workers() const { return std::max(1, options_.workers); }
  int Trials(int pinned) const { return options_.trials.value_or(pinned); }

 private:
  const ExperimentOptions& options_;
  std::uint64_t seed_;
};

void Add(ExperimentResult& r, std::string label, std::string observed,
         std::string expected, bool passed) {
  r.checks.push_back({std::move(label), std::move(observed),
                      std::move(expected), passed});
}

SummaryReport Simulate(const MechanismSpec& mechanism,
                       std::vector<DistributionSpec> dists, int agents,
                       int items, int trials, std::uint64_t seed,
                       int workers) {
  ScenarioConfig config;
  config.agents = agents;
  config.items = items;
  config.distributions = std::move(dists);
  config.mechanism = mechanism;
  config.trials = trials;
  config.seed = seed;
  config.workers = workers;
  return RunScenario(config);
}

DistributionSpec TwoAtomLike() {
  return DistributionSpec::PiecewiseLinearCdf({0.0, 0.01, 0.99, 1.0},
                                              {0.0, 0.707, 0.707, 1.0});
}

std::vector<std::pair<std::string, DistributionSpec>> BuiltInDistributions() {
  return {
      {"uniform[0,1]", DistributionSpec::Uniform(0.0, 1.0)},
      {"uniform[0.9,1]", DistributionSpec::Uniform(0.9, 1.0)},
      {"bernoulli(0.5)+U[0,0.1]",
       DistributionSpec::BernoulliPlusNoise(0.5, 0.1)},
      {"adversarial(0.01,0)", DistributionSpec::Adversarial(0.01, 0.0)},
      {"adversarial(0.01,0.001)", DistributionSpec::Adversarial(0.01, 0.001)},
      {"two-atom-like", TwoAtomLike()},
  };
}

void TwoAgentWelfare(const Context& ctx, ExperimentResult& r) {
  const std::vector<double> shares = {kTwoAgentShare, 1.0 - kTwoAgentShare};
  const SummaryReport uniform =
      Simulate(PickR{shares}, {DistributionSpec::Uniform(0.0, 1.0)}, 2, 2000,
               ctx.Trials(500), ctx.seed(), ctx.workers());
  const Interval u = uniform.welfare->ratio;
  Add(r, "uniform[0,1] welfare ratio", FmtInterval(u), "0.9053 +/- 0.010",
      std::abs(u.estimate - 0.9053) <= 0.010);
  const SummaryReport adversarial =
      Simulate(PickR{shares}, {DistributionSpec::Adversarial(0.01, 0.0)}, 2,
               5000, ctx.Trials(500), ctx.seed() + 1, ctx.workers());
  const Interval a = adversarial.welfare->ratio;
  Add(r, "adversarial(0.01,0) welfare ratio", FmtInterval(a),
      ">= " + Fmt(kTwoAgentRatioFloor, 5), a.estimate >= kTwoAgentRatioFloor);
  r.details = {{"uniform", uniform.ToJson(false)["audits"]},
               {"adversarial", adversarial.ToJson(false)["audits"]}};
}

void TwoAgentLowerBound(const Context& ctx, ExperimentResult& r) {
  LowerBoundAuditOptions options;
  options.p = 0.01;
  options.delta = 0.0;
  options.items = 4;
  options.trials = ctx.Trials(100'000);
  options.seed = ctx.seed();
  options.workers = ctx.workers();
  const LowerBoundAuditResult audit = TwoAgentLowerBoundAudit(options);
  const double limit = kTwoAgentBound + 0.02;
  Add(r, "best enumerated ratio", Fmt(audit.best_ratio()),
      "<= " + Fmt(limit, 5), audit.best_ratio() <= limit);
  r.details = {
      {"optimal_welfare", audit.optimal_welfare},
      {"candidates", audit.candidates},
      {"picking_only",
       {{"ratio", audit.picking_only.ratio},
        {"configuration", audit.picking_only.description}}},
      {"with_exchange",
       {{"ratio", audit.with_exchange.ratio},
        {"configuration", audit.with_exchange.description}}}};
}

void TwoAgentEfSelector(const Context& ctx, ExperimentResult& r) {
  const std::vector<std::pair<std::string, DistributionSpec>> cases = {
      {"uniform[0,1]", DistributionSpec::Uniform(0.0, 1.0)},
      {"uniform[0.9,1]", DistributionSpec::Uniform(0.9, 1.0)},
      {"adversarial(0.01,0.001)", DistributionSpec::Adversarial(0.01, 0.001)},
      {"two-atom-like", TwoAtomLike()},
  };
  constexpr int kItems = 4000;
  std::uint64_t seed = ctx.seed();
  for (const auto& [label, dist] : cases) {
    const TwoAgentChoice choice = SelectTwoAgentR(dist, kItems);
    const SummaryReport report =
        Simulate(PickR{{choice.share, 1.0 - choice.share}}, {dist}, 2, kItems,
                 ctx.Trials(300), seed++, ctx.workers());
    const Interval ef = *report.envy_free;
    const Interval ratio = report.welfare->ratio;
    Add(r, label + " EF frequency (r=" + Fmt(choice.share, 5) + ")",
        FmtInterval(ef), ">= 0.95", ef.estimate >= 0.95);
    Add(r, label + " welfare ratio", FmtInterval(ratio),
        ">= " + Fmt(kTwoAgentRatioFloor, 5),
        ratio.estimate >= kTwoAgentRatioFloor);
    r.details[label] = {{"share", choice.share},
                        {"integral", choice.integral},
                        {"ef_condition_holds", choice.ef_condition_holds},
                        {"envy_free", ef.estimate},
                        {"welfare_ratio", ratio.estimate}};
  }
}

void NAgentHalf(const Context& ctx, ExperimentResult& r) {
  const SummaryReport report =
      Simulate(PickR{{0.24, 0.24, 0.24, 0.28}},
               {DistributionSpec::Uniform(0.0, 1.0)}, 4, 4000,
               ctx.Trials(300), ctx.seed(), ctx.workers());
  Add(r, "welfare ratio", FmtInterval(report.welfare->ratio), ">= 0.50",
      report.welfare->ratio.estimate >= 0.50);
  Add(r, "EF frequency", FmtInterval(*report.envy_free), ">= 0.95",
      report.envy_free->estimate >= 0.95);
  r.details = report.ToJson(false)["audits"];
}

void BetaConstant(const Context&, ExperimentResult& r) {
  const BetaSolution beta = SolveBeta();
  Add(r, "beta", Fmt(beta.beta, 10), "in [0.7450, 0.7452]",
      beta.beta >= 0.7450 && beta.beta <= 0.7452);
  Add(r, "integral equation residual", Fmt(beta.residual, 3), "<= 1e-8",
      beta.residual <= 1e-8);
  r.details = {{"beta", beta.beta}, {"residual", beta.residual}};
}

void ProphetCorrespondence(const Context& ctx, ExperimentResult& r) {
  constexpr int kBlock = 1000;
  const int total = ctx.Trials(100'000);
  const std::vector<std::pair<std::string, DistributionSpec>> cases = {
      {"uniform[0,1]", DistributionSpec::Uniform(0.0, 1.0)},
      {"adversarial(0.05,0.01)", DistributionSpec::Adversarial(0.05, 0.01)},
  };
  for (const auto& [label, dist] : cases) {
    for (int n : {2, 3, 5}) {
      const StoppingRule rule = BestThresholdRule(dist, n);
      const DistributionSpec dists[] = {dist};
      long mismatches = 0;
      long welfare_mismatches = 0;
      for (int start = 0, block = 0; start < total; start += kBlock, ++block) {
        const int m = std::min(kBlock, total - start);
        RandomStream rng(ctx.seed() + n, static_cast<std::uint64_t>(block));
        const ValuationMatrix v = ValuationMatrix::Draw(n, m, dists, rng);
        const Allocation alloc = RunQtS(rule.thresholds, dists, v);
        std::vector<double> column(n);
        for (int j = 0; j < m; ++j) {
          for (int i = 0; i < n; ++i) column[i] = v.at(i, j);
          const StopOutcome stop = RunQtp(rule, dist, column);
          mismatches += stop.index != alloc.owner(j);
          welfare_mismatches += stop.value != v.at(alloc.owner(j), j);
        }
      }
      Add(r, label + " n=" + std::to_string(n) + " owner/stop mismatches",
          std::to_string(mismatches) + " of " + std::to_string(total), "0",
          mismatches == 0);
      Add(r, label + " n=" + std::to_string(n) + " value mismatches",
          std::to_string(welfare_mismatches), "0", welfare_mismatches == 0);
    }
  }
}

void OptimalRatioFloor(const Context&, ExperimentResult& r) {
  const int horizons[] = {2, 4, 8, 16, 32, 64};
  double worst = 1.0;
  std::string worst_case;
  for (const auto& [label, dist] : BuiltInDistributions()) {
    json row = json::object();
    double previous = 1.0;
    bool monotone = true;
    for (int n : horizons) {
      const double ratio = OptimalRatio(dist, n);
      row[std::to_string(n)] = ratio;
      if (ratio < worst) {
        worst = ratio;
        worst_case = label + " n=" + std::to_string(n);
      }
      monotone = monotone && ratio <= previous + 1e-12;
      previous = ratio;
    }
    r.details["ratios"][label] = row;
    r.details["nonincreasing_in_n"][label] = monotone;
  }
  Add(r, "minimum optimal ratio (" + worst_case + ")", Fmt(worst), ">= 0.740",
      worst >= 0.740);
}

void BicRanking(const Context& ctx, ExperimentResult& r) {
  const std::vector<DistributionSpec> dists = {
      DistributionSpec::Uniform(0.0, 1.0)};
  const SummaryReport report = Simulate(Ranking{}, dists, 3, 2000,
                                        ctx.Trials(200), ctx.seed(),
                                        ctx.workers());
  Add(r, "welfare ratio", FmtInterval(report.welfare->ratio), ">= 0.97",
      report.welfare->ratio.estimate >= 0.97);
  Add(r, "EF frequency", FmtInterval(*report.envy_free), ">= 0.95",
      report.envy_free->estimate >= 0.95);
  BicOptions options;
  options.trials = 10'000;
  options.seed = ctx.seed() + 1;
  options.workers = ctx.workers();
  const BicReport bic = BicAudit(Ranking{}, dists, 3, 50, options);
  for (const BicEstimate& e : bic.estimates) {
    Add(r, "BIC " + std::string(BicDeviationTag(e.deviation)) + " gain",
        FmtInterval(e.gain), "CI low <= 0", !e.violation);
  }
  r.details = report.ToJson(false)["audits"];
}

ValuationMatrix GridInstance(int agents, int items, std::uint64_t code,
                             const std::vector<double>& grid) {
  ValuationMatrix v(agents, items);
  for (int i = 0; i < agents; ++i) {
    for (int j = 0; j < items; ++j) {
      v.set(i, j, grid[code % grid.size()]);
      code /= grid.size();
    }
  }
  return v;
}

// Exhaustive grid instances when there are at most kMaxEnumerated of them,
// otherwise kSampled random grid instances.
void ForEachGridInstance(
    int agents, int items, std::uint64_t seed,
    const std::function<void(std::uint64_t, const ValuationMatrix&)>& visit) {
  constexpr std::uint64_t kMaxEnumerated = 15'625;
  constexpr std::uint64_t kSampled = 2'000;
  const std::vector<double> grid = DsicOptions{}.grid;
  std::uint64_t count = 1;
  for (int k = 0; k < agents * items && count <= kMaxEnumerated; ++k) {
    count *= grid.size();
  }
  if (count <= kMaxEnumerated) {
    for (std::uint64_t code = 0; code < count; ++code) {
      visit(code, GridInstance(agents, items, code, grid));
    }
    return;
  }
  for (std::uint64_t k = 0; k < kSampled; ++k) {
    RandomStream rng(seed, k);
    ValuationMatrix v(agents, items);
    for (int i = 0; i < agents; ++i) {
      for (int j = 0; j < items; ++j) {
        v.set(i, j, grid[rng.NextBelow(grid.size())]);
      }
    }
    visit(k, v);
  }
}

std::vector<double> FuzzShares(int agents, RandomStream& rng) {
  std::vector<double> shares(agents);
  for (double& s : shares) s = rng.NextUniform() + 1e-3;
  const double total = std::accumulate(shares.begin(), shares.end(), 0.0);
  for (double& s : shares) s /= total;
  shares.back() = 1.0 - std::accumulate(shares.begin(), shares.end() - 1, 0.0);
  return shares;
}

void DsicSuite(const Context& ctx, ExperimentResult& r) {
  long pick_instances = 0;
  long pick_witnesses = 0;
  long exchange_instances = 0;
  long exchange_witnesses = 0;
  std::optional<DeviationReport> example;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const std::uint64_t seed = ctx.seed() + 10 * n + m;
      ForEachGridInstance(n, m, seed, [&](std::uint64_t k,
                                          const ValuationMatrix& v) {
        RandomStream rng(seed + 1000, k);
        const PickR pick{FuzzShares(n, rng)};
        ++pick_instances;
        pick_witnesses += DsicAudit(pick, v).witnesses.size();
        if (n != 2 || m < 2) return;
        const std::uint32_t full = (1u << m) - 1;
        for (std::uint32_t first = 1; first < full; ++first) {
          Exchange ex;
          for (int j = 0; j < m; ++j) {
            (first >> j & 1 ? ex.first : ex.second).push_back(j);
          }
          ++exchange_instances;
          exchange_witnesses += DsicAudit(ex, v).witnesses.size();
        }
      });
    }
  }
  long welfare_witnesses = 0;
  long welfare_instances = 0;
  ForEachGridInstance(2, 2, ctx.seed(), [&](std::uint64_t,
                                            const ValuationMatrix& v) {
    ++welfare_instances;
    const DsicResult result = DsicAudit(WelfareMax{}, v);
    welfare_witnesses += result.witnesses.size();
    if (!example && !result.witnesses.empty()) {
      example = result.witnesses.front();
    }
  });
  Add(r, "pick-r witnesses over " + std::to_string(pick_instances) +
             " instances",
      std::to_string(pick_witnesses), "0", pick_witnesses == 0);
  Add(r, "exchange witnesses over " + std::to_string(exchange_instances) +
             " (instance, endowment) pairs",
      std::to_string(exchange_witnesses), "0", exchange_witnesses == 0);
  Add(r, "welfare-max witnesses over " + std::to_string(welfare_instances) +
             " instances",
      std::to_string(welfare_witnesses), ">= 1", welfare_witnesses >= 1);
  if (example) {
    r.details["welfare_max_example"] = {{"agent", example->agent},
                                        {"misreport", example->misreport},
                                        {"gain", example->gain}};
  }
}

void AbsDeviationBounds(ExperimentResult& r) {
  int pairs = 0;
  int failures = 0;
  for (int s = 1; s <= 40; ++s) {
    for (int h = 2; h <= std::min(2 * s, 40); ++h) {
      ++pairs;
      failures += !AbsDeviationBoundCheck(s, h);
    }
  }
  Add(r, "hypergeometric <= binomial <= h/4 pairs",
      std::to_string(pairs - failures) + " of " + std::to_string(pairs),
      "all", failures == 0);
  Add(r, "binomial side at h=2", Fmt(BinomialAbsDeviation(2), 12), "0.5",
      std::abs(BinomialAbsDeviation(2) - 0.5) <= 1e-12);
  Add(r, "binomial side at h=3", Fmt(BinomialAbsDeviation(3), 12), "0.75",
      std::abs(BinomialAbsDeviation(3) - 0.75) <= 1e-12);
}

void EnvyMargin(ExperimentResult& r) {
  const bool grid_ok = EnvyMarginSCheck(10'000);
  Add(r, "envelope margin on 10^4 grid", grid_ok ? "nonnegative" : "negative",
      "nonnegative", grid_ok);
  const double root2 = std::sqrt(2.0);
  const struct {
    const char* label;
    double t;
    double expected;
  } spots[] = {
      {"margin at t=1/7", 1.0 / 7.0, (10.0 - 7.0 * root2) / 28.0},
      {"margin at t=1", 1.0, 0.0},
      {"margin at t=1-r", 1.0 - kTwoAgentShare, 0.875 * (1.5 - root2)},
  };
  for (const auto& spot : spots) {
    const double got = EnvyMarginS(spot.t);
    Add(r, spot.label, Fmt(got, 12), Fmt(spot.expected, 12),
        std::abs(got - spot.expected) <= 1e-9);
  }
}

void SplitBounds(const Context&, ExperimentResult& r) {
  AbsDeviationBounds(r);
  EnvyMargin(r);
}

void CouplingBound(const Context& ctx, ExperimentResult& r) {
  constexpr int kItems = 10'000;
  const double bound = 5.0 * 4.0 * std::sqrt(kItems * std::log(kItems));
  const std::vector<double> shares = {0.5, 0.5};
  const DistributionSpec dist = DistributionSpec::Uniform(0.0, 1.0);
  const int seeds = ctx.Trials(50);
  const auto counts = RunIndexed(seeds, ctx.workers(), [&](int k) {
    return CouplingDivergence(shares, dist, kItems, ctx.seed() + k);
  });
  const int worst = *std::max_element(counts.begin(), counts.end());
  Add(r, "largest divergence over " + std::to_string(seeds) + " seeds",
      std::to_string(worst), "<= " + Fmt(bound, 6), worst <= bound);
  r.details = {{"counts", counts}, {"bound", bound}};
}

void WeightedRankingCheck(const Context& ctx, ExperimentResult& r) {
  const std::vector<DistributionSpec> dists = {
      DistributionSpec::Uniform(0.0, 1.0), DistributionSpec::Uniform(0.0, 2.0)};
  const WeightSolution solved = SolveWeights(dists);
  Add(r, "weight solver residual", Fmt(solved.residual, 3), "<= 1e-3",
      solved.residual <= 1e-3);
  constexpr int kItems = 2000;
  constexpr int kSubsample = 10;
  constexpr double kAlpha = 0.95;
  const int trials = ctx.Trials(200);
  struct Outcome {
    bool envy_free = false;
    bool pareto = false;
  };
  const auto outcomes = RunIndexed(trials, ctx.workers(), [&](int t) {
    RandomStream rng(ctx.seed(), static_cast<std::uint64_t>(t));
    const ValuationMatrix v = ValuationMatrix::Draw(2, kItems, dists, rng);
    const Allocation alloc = RunWeightedRanking(v, dists, solved.weights);
    RandomStream pick = rng.Substream(1);
    std::vector<int> items(kItems);
    std::iota(items.begin(), items.end(), 0);
    for (int k = 0; k < kSubsample; ++k) {
      std::swap(items[k], items[k + pick.NextBelow(kItems - k)]);
    }
    ValuationMatrix sub(2, kSubsample);
    std::vector<int> owners(kSubsample);
    for (int k = 0; k < kSubsample; ++k) {
      for (int i = 0; i < 2; ++i) sub.set(i, k, v.at(i, items[k]));
      owners[k] = alloc.owner(items[k]);
    }
    return Outcome{IsEnvyFree(v, alloc),
                   ParetoCheck(sub, Allocation(2, owners), kAlpha)};
  });
  std::int64_t envy_free = 0;
  std::int64_t pareto = 0;
  for (const Outcome& o : outcomes) {
    envy_free += o.envy_free;
    pareto += o.pareto;
  }
  const Interval ef = WilsonInterval(envy_free, trials);
  Add(r, "EF frequency", FmtInterval(ef), ">= 0.95", ef.estimate >= 0.95);
  Add(r, "0.95-Pareto on 10-item subsamples",
      std::to_string(pareto) + " of " + std::to_string(trials), "all",
      pareto == trials);
  r.details = {{"weights", solved.weights},
               {"win_probabilities", solved.win_probabilities},
               {"iterations", solved.iterations}};
}

struct Entry {
  ExperimentInfo info;
  std::uint64_t seed;
  std::function<void(const Context&, ExperimentResult&)> run;
};

const std::vector<Entry>& Entries() {
  static const std::vector<Entry> entries = {
      {{"two-agent-welfare", 1,
        "Pick-r at r=(2-sqrt2)/2: welfare on U[0,1] and adversarial values"},
       101, TwoAgentWelfare},
      {{"two-agent-lower-bound", 2,
        "best picking/exchange configuration on 4 adversarial items"},
       202, TwoAgentLowerBound},
      {{"two-agent-ef-selector", 3,
        "selected Pick-r split: EF frequency and welfare at m=4000"},
       303, TwoAgentEfSelector},
      {{"n-agent-half", 4, "near-equal Pick-r with 4 agents at m=4000"}, 404,
       NAgentHalf},
      {{"beta-constant", 5, "asymptotic i.i.d. prophet constant"}, 505,
       BetaConstant},
      {{"prophet-correspondence", 6,
        "QT-s owners equal threshold stopping indices item by item"},
       606, ProphetCorrespondence},
      {{"optimal-ratio-floor", 7,
        "optimal stopping ratio over built-in distributions, n up to 64"},
       707, OptimalRatioFloor},
      {{"bic-ranking", 8, "Ranking: welfare, EF and Bayesian deviations"},
       808, BicRanking},
      {{"dsic-suite", 9,
        "exhaustive misreport search for pick-r, exchange and welfare-max"},
       909, DsicSuite},
      {{"split-bounds", 10,
        "absolute-deviation bound and the envy envelope margin"},
       1010, SplitBounds},
      {{"coupling-bound", 11, "Pick-r versus QT-s divergence at m=10^4"}, 1111,
       CouplingBound},
      {{"weighted-ranking", 12,
        "weights for U[0,1] and U[0,2]; EF and 0.95-Pareto"},
       1212, WeightedRankingCheck},
      {{"lemma-b1", 0, "absolute-deviation bound only"}, 1010,
       [](const Context&, ExperimentResult& r) { AbsDeviationBounds(r); }},
      {{"envy-margin", 0, "envy envelope margin only"}, 1010,
       [](const Context&, ExperimentResult& r) { EnvyMargin(r); }},
  };
  return entries;
}

}  // namespace

bool ExperimentResult::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return !checks.empty();
}

json ExperimentResult::ToJson() const {
  json rows = json::array();
  for (const auto& c : checks) {
    rows.push_back({{"label", c.label},
                    {"observed", c.observed},
                    {"expected", c.expected},
                    {"passed", c.passed}});
  }
  return {{"experiment", name},       {"passed", passed()},
          {"checks", rows},           {"details", details},
          {"version", FAIRSTOP_VERSION}, {"elapsed_seconds", elapsed_seconds}};
}

const std::vector<ExperimentInfo>& ExperimentRegistry() {
  static const std::vector<ExperimentInfo> infos = [] {
    std::vector<ExperimentInfo> out;
    for (const Entry& e : Entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

ExperimentResult RunExperiment(std::string_view name,
                               const ExperimentOptions& options) {
  for (const Entry& e : Entries()) {
    if (e.info.name != name) continue;
    const auto start = std::chrono::steady_clock::now();
    ExperimentResult result;
    result.name = e.info.name;
    e.run(Context(options, e.seed), result);
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    return result;
  }
  std::string known;
  for (const Entry& e : Entries()) known += "\n  " + e.info.name;
  throw std::out_of_range("unknown experiment '" + std::string(name) +
                          "'; registered:" + known);
}

}  // namespace fairstop
