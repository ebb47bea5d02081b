// Copyright 2026 The Authors.
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

#include "moviechat/dm/policy_config.h"

#include <fstream>
#include <set>

#include "moviechat/core/errors.h"

namespace moviechat {

void ValidatePolicyConfig(const PolicyConfig& config) {
  if (config.result_threshold < 1) {
    throw ConfigError("result_threshold must be at least 1");
  }
  if (config.max_elicit_questions < 1) {
    throw ConfigError("max_elicit_questions must be at least 1");
  }
  if (config.matching_cap < 0) throw ConfigError("matching_cap is negative");
  std::set<SlotName> seen;
  for (SlotName slot : config.elicitation_order) {
    if (!HasLexicon(slot) && !IsNumeric(slot)) {
      throw ConfigError("cannot elicit slot " + std::string(SlotToString(slot)));
    }
    if (!seen.insert(slot).second) {
      throw ConfigError("slot " + std::string(SlotToString(slot)) +
                        " listed twice in elicitation_order");
    }
  }
}

PolicyConfig PolicyConfigFromJson(const Json& json) {
  PolicyConfig config;
  try {
    if (!json.is_object()) throw ConfigError("policy config must be an object");
    config.result_threshold =
        json.value("result_threshold", config.result_threshold);
    config.max_elicit_questions =
        json.value("max_elicit_questions", config.max_elicit_questions);
    config.count_disclosure =
        json.value("count_disclosure", config.count_disclosure);
    config.matching_cap = json.value("matching_cap", config.matching_cap);
    config.disjunctive_eq = json.value("disjunctive_eq", config.disjunctive_eq);
    if (json.contains("elicitation_order")) {
      config.elicitation_order.clear();
      for (const Json& s : json.at("elicitation_order")) {
        config.elicitation_order.push_back(ParseSlot(s.get<std::string>()));
      }
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("policy config: ") + e.what());
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("policy config: ") + e.what());
  }
  ValidatePolicyConfig(config);
  return config;
}

PolicyConfig LoadPolicyConfig(std::istream& in) {
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("policy config: ") + e.what());
  }
  return PolicyConfigFromJson(json);
}

PolicyConfig LoadPolicyConfigFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open policy config " + path.string());
  return LoadPolicyConfig(in);
}

Json ToJson(const PolicyConfig& config) {
  Json order = Json::array();
  for (SlotName slot : config.elicitation_order) {
    order.push_back(std::string(SlotToString(slot)));
  }
  return Json{{"result_threshold", config.result_threshold},
              {"max_elicit_questions", config.max_elicit_questions},
              {"elicitation_order", order},
              {"count_disclosure", config.count_disclosure},
              {"matching_cap", config.matching_cap},
              {"disjunctive_eq", config.disjunctive_eq}};
}

}  // namespace moviechat
