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

#include "fairstop/config.h"

#include <fstream>
#include <set>
#include <sstream>
#include <type_traits>

namespace fairstop {
namespace {

using nlohmann::json;

std::string JoinViolations(const std::vector<std::string>& violations) {
  std::string out = "invalid config:";
  for (const auto& v : violations) out += "\n  - " + v;
  return out;
}

void RejectUnknownKeys(const json& doc, std::initializer_list<const char*> keys,
                       const std::string& where,
                       std::vector<std::string>& violations) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.count(key)) {
      violations.push_back(where + ": unknown key '" + key + "'");
    }
  }
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::vector<std::vector<int>> ItemLists(const json& doc) {
  return doc.get<std::vector<std::vector<int>>>();
}

json ComponentToJson(const Component& c) {
  json out = {{"items", c.items}};
  std::visit(
      [&](const auto& rule) {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, CardinalityMenu>) {
          out["rule"] = "cardinality";
          out["picker"] = rule.picker;
          out["count"] = rule.count;
        } else if constexpr (std::is_same_v<T, ExplicitMenu>) {
          out["rule"] = "menu";
          out["picker"] = rule.picker;
          out["entries"] = rule.entries;
        } else {
          out["rule"] = "exchange";
          out["first"] = rule.first;
          out["second"] = rule.second;
        }
      },
      c.rule);
  return out;
}

Component ComponentFromJson(const json& doc) {
  Require(doc.is_object(), "component must be an object");
  const std::string rule = doc.at("rule").get<std::string>();
  Component c{doc.at("items").get<std::vector<int>>(), {}};
  if (rule == "cardinality") {
    for (const auto& [key, value] : doc.items()) {
      Require(key == "items" || key == "rule" || key == "picker" ||
                  key == "count",
              "cardinality component: unknown key '" + key + "'");
    }
    c.rule = CardinalityMenu{doc.at("picker").get<int>(),
                             doc.at("count").get<int>()};
  } else if (rule == "menu") {
    for (const auto& [key, value] : doc.items()) {
      Require(key == "items" || key == "rule" || key == "picker" ||
                  key == "entries",
              "menu component: unknown key '" + key + "'");
    }
    c.rule = ExplicitMenu{doc.at("picker").get<int>(),
                          ItemLists(doc.at("entries"))};
  } else if (rule == "exchange") {
    for (const auto& [key, value] : doc.items()) {
      Require(key == "items" || key == "rule" || key == "first" ||
                  key == "second",
              "exchange component: unknown key '" + key + "'");
    }
    c.rule = ExchangeEndowment{doc.at("first").get<std::vector<int>>(),
                               doc.at("second").get<std::vector<int>>()};
  } else {
    throw std::invalid_argument("unknown component rule '" + rule + "'");
  }
  return c;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error(JoinViolations(violations)),
      violations_(std::move(violations)) {}

std::string_view AuditTag(AuditKind kind) {
  switch (kind) {
    case AuditKind::kWelfareRatio:
      return "welfare-ratio";
    case AuditKind::kEnvy:
      return "envy";
    case AuditKind::kDsic:
      return "dsic";
    case AuditKind::kBic:
      return "bic";
    case AuditKind::kPareto:
      return "pareto";
  }
  return "unknown";
}

AuditKind ParseAudit(std::string_view tag) {
  for (AuditKind kind : {AuditKind::kWelfareRatio, AuditKind::kEnvy,
                         AuditKind::kDsic, AuditKind::kBic,
                         AuditKind::kPareto}) {
    if (AuditTag(kind) == tag) return kind;
  }
  throw std::invalid_argument("unknown audit '" + std::string(tag) + "'");
}

json DistributionToJson(const DistributionSpec& dist) {
  return {{"family", dist.tag()}, {"params", dist.params()}};
}

DistributionSpec DistributionFromJson(const json& doc) {
  Require(doc.is_object(), "distribution must be an object");
  for (const auto& [key, value] : doc.items()) {
    Require(key == "family" || key == "params",
            "distribution: unknown key '" + key + "'");
  }
  return DistributionSpec::FromParams(
      doc.at("family").get<std::string>(),
      doc.at("params").get<std::vector<double>>());
}

json MechanismToJson(const MechanismSpec& spec) {
  json out = {{"type", MechanismTag(spec)}};
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PickR>) {
          out["shares"] = m.shares;
        } else if constexpr (std::is_same_v<T, QtS>) {
          out["thresholds"] = m.thresholds;
        } else if constexpr (std::is_same_v<T, Exchange>) {
          out["first"] = m.first;
          out["second"] = m.second;
        } else if constexpr (std::is_same_v<T, PickingExchange>) {
          out["components"] = json::array();
          for (const auto& c : m.components) {
            out["components"].push_back(ComponentToJson(c));
          }
        } else if constexpr (std::is_same_v<T, WeightedRanking>) {
          if (!m.weights.empty()) out["weights"] = m.weights;
        }
      },
      spec);
  return out;
}

MechanismSpec MechanismFromJson(const json& doc) {
  Require(doc.is_object(), "mechanism must be an object");
  const std::string type = doc.at("type").get<std::string>();
  auto only = [&](std::initializer_list<const char*> keys) {
    std::vector<std::string> violations;
    RejectUnknownKeys(doc, keys, "mechanism " + type, violations);
    if (!violations.empty()) throw std::invalid_argument(violations.front());
  };
  if (type == "pick-r") {
    only({"type", "shares"});
    return PickR{doc.at("shares").get<std::vector<double>>()};
  }
  if (type == "qt-s") {
    only({"type", "thresholds", "shares"});
    if (doc.contains("shares")) {
      Require(!doc.contains("thresholds"),
              "qt-s takes thresholds or shares, not both");
      return QtS{ThresholdsFromShares(
          doc.at("shares").get<std::vector<double>>())};
    }
    return QtS{doc.at("thresholds").get<std::vector<double>>()};
  }
  if (type == "exchange") {
    only({"type", "first", "second"});
    return Exchange{doc.at("first").get<std::vector<int>>(),
                    doc.at("second").get<std::vector<int>>()};
  }
  if (type == "picking-exchange") {
    only({"type", "components"});
    PickingExchange m;
    for (const auto& c : doc.at("components")) {
      m.components.push_back(ComponentFromJson(c));
    }
    return m;
  }
  if (type == "ranking") {
    only({"type"});
    return Ranking{};
  }
  if (type == "weighted-ranking") {
    only({"type", "weights"});
    WeightedRanking m;
    if (doc.contains("weights")) {
      m.weights = doc.at("weights").get<std::vector<double>>();
    }
    return m;
  }
  if (type == "welfare-max") {
    only({"type"});
    return WelfareMax{};
  }
  if (type == "serial-dictator") {
    only({"type"});
    return SerialDictator{};
  }
  throw std::invalid_argument("unknown mechanism type '" + type + "'");
}

ScenarioConfig ScenarioFromJson(const json& doc) {
  std::vector<std::string> violations;
  if (!doc.is_object()) throw ConfigError({"config must be a JSON object"});
  RejectUnknownKeys(doc,
                    {"agents", "items", "distributions", "mechanism", "trials",
                     "seed", "workers", "audits", "output", "pareto_alpha",
                     "dsic_instances"},
                    "config", violations);
  ScenarioConfig config;
  auto field = [&](const char* key, bool required, auto&& parse) {
    if (!doc.contains(key)) {
      if (required) violations.push_back(std::string("missing '") + key + "'");
      return;
    }
    try {
      parse(doc.at(key));
    } catch (const std::exception& e) {
      violations.push_back(std::string(key) + ": " + e.what());
    }
  };
  field("agents", true, [&](const json& v) { config.agents = v.get<int>(); });
  field("items", true, [&](const json& v) { config.items = v.get<int>(); });
  field("distributions", true, [&](const json& v) {
    Require(v.is_array(), "must be an array");
    for (const auto& d : v) {
      config.distributions.push_back(DistributionFromJson(d));
    }
  });
  field("mechanism", true,
        [&](const json& v) { config.mechanism = MechanismFromJson(v); });
  field("trials", false, [&](const json& v) { config.trials = v.get<int>(); });
  field("seed", false,
        [&](const json& v) { config.seed = v.get<std::uint64_t>(); });
  field("workers", false,
        [&](const json& v) { config.workers = v.get<int>(); });
  field("audits", false, [&](const json& v) {
    config.audits.clear();
    for (const auto& a : v) config.audits.push_back(ParseAudit(a.get<std::string>()));
  });
  field("output", false,
        [&](const json& v) { config.output = v.get<std::string>(); });
  field("pareto_alpha", false,
        [&](const json& v) { config.pareto_alpha = v.get<double>(); });
  field("dsic_instances", false,
        [&](const json& v) { config.dsic_instances = v.get<int>(); });
  if (!violations.empty()) throw ConfigError(violations);
  ValidateScenario(config);
  return config;
}

void ValidateScenario(const ScenarioConfig& config) {
  std::vector<std::string> violations;
  if (config.agents < 1) violations.push_back("agents must be >= 1");
  if (config.items < 1) violations.push_back("items must be >= 1");
  if (config.trials < 1) violations.push_back("trials must be >= 1");
  if (config.workers < 0) violations.push_back("workers must be >= 0");
  if (config.dsic_instances < 0) {
    violations.push_back("dsic_instances must be >= 0");
  }
  if (!(config.pareto_alpha > 0.0 && config.pareto_alpha <= 1.0)) {
    violations.push_back("pareto_alpha must lie in (0, 1]");
  }
  const auto dists = config.distributions.size();
  if (dists == 0 ||
      (dists != 1 && static_cast<int>(dists) != config.agents)) {
    violations.push_back("distributions: give one, or one per agent");
  }
  if (std::holds_alternative<WeightedRanking>(config.mechanism) &&
      static_cast<int>(dists) != config.agents) {
    violations.push_back("weighted-ranking needs one distribution per agent");
  }
  if (violations.empty()) {
    try {
      ValidateMechanism(config.mechanism, config.agents, config.items,
                        config.distributions);
    } catch (const std::exception& e) {
      violations.push_back(std::string("mechanism: ") + e.what());
    }
  }
  if (!violations.empty()) throw ConfigError(violations);
}

json ScenarioToJson(const ScenarioConfig& config) {
  json dists = json::array();
  for (const auto& d : config.distributions) {
    dists.push_back(DistributionToJson(d));
  }
  json audits = json::array();
  for (AuditKind a : config.audits) audits.push_back(AuditTag(a));
  json out = {{"agents", config.agents},
              {"items", config.items},
              {"distributions", dists},
              {"mechanism", MechanismToJson(config.mechanism)},
              {"trials", config.trials},
              {"seed", config.seed},
              {"workers", config.workers},
              {"audits", audits},
              {"pareto_alpha", config.pareto_alpha},
              {"dsic_instances", config.dsic_instances}};
  if (!config.output.empty()) out["output"] = config.output;
  return out;
}

ScenarioConfig LoadScenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError({"cannot open config file '" + path + "'"});
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({std::string("malformed JSON: ") + e.what()});
  }
  return ScenarioFromJson(doc);
}

}  // namespace fairstop
