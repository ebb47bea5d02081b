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

#include "moviechat/nlg/template_set.h"

#include <fstream>

#include "moviechat/core/errors.h"

namespace moviechat {

std::string Signature(const DialogueAct& act) {
  switch (act.intent) {
    case Intent::kElicit:
    case Intent::kInform:
      return act.constraints.empty()
                 ? ""
                 : std::string(SlotToString(act.constraints.front().slot));
    case Intent::kTooManyResults:
      return "count";
    case Intent::kRecommend:
      return "item";
    case Intent::kNoResults:
      return act.count.value_or(0) > 0 ? "exhausted" : "";
    default:
      return "";
  }
}

namespace {

constexpr const char* kRequiredPhrases[] = {
    "recap_prefix", "recap_empty", "restart", "help", "closed",
    "no_preferences"};

// inquire_<slot> for keywords and title are optional: no button uses them.
constexpr const char* kRequiredButtons[] = {
    "accept",           "reject_watched",       "reject_dont_like",
    "inquire",          "continue",             "similar",
    "restart",          "quit",                 "dont_care",
    "remove",           "remove_actor",         "remove_director",
    "inquire_plot",     "inquire_genres",       "inquire_actors",
    "inquire_directors", "inquire_release_year", "inquire_duration",
    "inquire_rating"};

}  // namespace

TemplateSet TemplateSet::FromJson(const Json& json) {
  TemplateSet set;
  try {
    for (const Json& entry : json.at("templates")) {
      const Intent intent = ParseIntent(entry.at("intent").get<std::string>());
      if (!IsAgentIntent(intent)) {
        throw ConfigError("templates are only for agent intents, got " +
                          std::string(IntentToString(intent)));
      }
      auto& list = set.templates_[{intent, entry.value("signature", "")}];
      for (const Json& t : entry.at("templates")) {
        const std::string text = t.get<std::string>();
        Placeholders(text);  // validates braces
        list.push_back(text);
      }
      if (list.empty()) throw ConfigError("empty template list");
    }
    if (json.contains("slot_labels")) {
      for (const auto& [name, label] : json.at("slot_labels").items()) {
        ParseSlot(name);
        set.slot_labels_[name] = label.get<std::string>();
      }
    }
    if (json.contains("phrases")) {
      set.phrases_ =
          json.at("phrases").get<std::map<std::string, std::string>>();
    }
    if (json.contains("buttons")) {
      set.buttons_ =
          json.at("buttons").get<std::map<std::string, std::string>>();
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("templates: ") + e.what());
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("templates: ") + e.what());
  }
  for (const char* key : kRequiredPhrases) {
    if (set.phrases_.count(key) == 0) {
      throw ConfigError(std::string("templates: missing phrase ") + key);
    }
  }
  for (const char* key : kRequiredButtons) {
    if (set.buttons_.count(key) == 0) {
      throw ConfigError(std::string("templates: missing button ") + key);
    }
  }
  return set;
}

TemplateSet TemplateSet::Load(std::istream& in) {
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("templates: ") + e.what());
  }
  return FromJson(json);
}

TemplateSet TemplateSet::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open templates " + path.string());
  return Load(in);
}

bool TemplateSet::Has(Intent intent, const std::string& signature) const {
  return templates_.count({intent, signature}) > 0;
}

const std::vector<std::string>& TemplateSet::Get(
    Intent intent, const std::string& signature) const {
  auto it = templates_.find({intent, signature});
  if (it == templates_.end()) {
    throw ConfigError("no template for " + std::string(IntentToString(intent)) +
                      "(" + signature + ")");
  }
  return it->second;
}

const std::string& TemplateSet::Phrase(const std::string& key) const {
  auto it = phrases_.find(key);
  if (it == phrases_.end()) throw ConfigError("no phrase '" + key + "'");
  return it->second;
}

const std::string& TemplateSet::ButtonLabel(const std::string& key) const {
  auto it = buttons_.find(key);
  if (it == buttons_.end()) throw ConfigError("no button label '" + key + "'");
  return it->second;
}

std::string TemplateSet::SlotLabel(SlotName slot) const {
  const std::string name(SlotToString(slot));
  auto it = slot_labels_.find(name);
  return it == slot_labels_.end() ? name : it->second;
}

std::vector<std::string> Placeholders(const std::string& text) {
  std::vector<std::string> names;
  size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string::npos) {
    const size_t close = text.find('}', pos);
    if (close == std::string::npos) {
      throw ConfigError("unterminated placeholder in \"" + text + "\"");
    }
    names.push_back(text.substr(pos + 1, close - pos - 1));
    pos = close + 1;
  }
  return names;
}

std::string Substitute(const std::string& text,
                       const std::map<std::string, std::string>& bindings) {
  std::string out;
  size_t pos = 0;
  while (true) {
    const size_t open = text.find('{', pos);
    if (open == std::string::npos) {
      out.append(text, pos, std::string::npos);
      return out;
    }
    const size_t close = text.find('}', open);
    if (close == std::string::npos) {
      throw ConfigError("unterminated placeholder in \"" + text + "\"");
    }
    out.append(text, pos, open - pos);
    const std::string name = text.substr(open + 1, close - open - 1);
    auto it = bindings.find(name);
    if (it == bindings.end()) {
      throw ConfigError("placeholder {" + name + "} is not bound in \"" + text +
                        "\"");
    }
    out += it->second;
    pos = close + 1;
  }
}

}  // namespace moviechat
