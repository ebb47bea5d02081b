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

#include "moviechat/nlu/pattern_registry.h"

#include <algorithm>
#include <fstream>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

Phrase ToPhrase(const Lemmatizer& lemmatizer, const std::string& text) {
  Phrase phrase;
  for (const Token& t : lemmatizer.Tokenize(text)) phrase.push_back(t.lemma);
  if (phrase.empty()) throw ConfigError("empty pattern \"" + text + "\"");
  return phrase;
}

std::vector<Phrase> PhraseList(const Lemmatizer& lemmatizer, const Json& json,
                               const char* key) {
  std::vector<Phrase> out;
  if (!json.contains(key)) return out;
  const Json& list = json.at(key);
  if (!list.is_array()) throw ConfigError(std::string(key) + " must be a list");
  for (const Json& e : list) {
    if (!e.is_string()) {
      throw ConfigError(std::string(key) + " entries must be strings");
    }
    out.push_back(ToPhrase(lemmatizer, e.get<std::string>()));
  }
  // Longest first so that multi-word cues win over their prefixes.
  std::stable_sort(out.begin(), out.end(), [](const Phrase& a, const Phrase& b) {
    return a.size() > b.size();
  });
  return out;
}

}  // namespace

PatternRegistry PatternRegistry::FromJson(const Json& json) {
  if (!json.is_object()) throw ConfigError("pattern registry must be an object");
  PatternRegistry reg;
  try {
    if (json.contains("lemma_exceptions")) {
      reg.lemmatizer_.AddExceptions(
          json.at("lemma_exceptions").get<std::map<std::string, std::string>>());
    }
    const Lemmatizer& lem = reg.lemmatizer_;
    int order = 0;
    for (const Json& group : json.at("intents")) {
      const Intent intent = ParseIntent(group.at("intent").get<std::string>());
      if (!IsUserIntent(intent) || intent == Intent::kReveal ||
          intent == Intent::kRemovePreference ||
          intent == Intent::kUnrecognized) {
        throw ConfigError("intent " + std::string(IntentToString(intent)) +
                          " cannot have trigger patterns");
      }
      std::set<AgentStage> stages;
      if (group.contains("stages")) {
        for (const Json& s : group.at("stages")) {
          stages.insert(ParseStage(s.get<std::string>()));
        }
      }
      for (const Json& p : group.at("patterns")) {
        IntentPattern pattern;
        pattern.intent = intent;
        pattern.stages = stages;
        pattern.order = order++;
        if (p.is_string()) {
          pattern.text = p.get<std::string>();
        } else {
          pattern.text = p.at("text").get<std::string>();
          if (p.contains("slot")) {
            pattern.slot = ParseSlot(p.at("slot").get<std::string>());
          }
          if (p.contains("feedback")) {
            pattern.feedback =
                ParseFeedback(p.at("feedback").get<std::string>());
          }
        }
        if (pattern.slot && intent != Intent::kInquire) {
          throw ConfigError("only Inquire patterns may name a slot");
        }
        if (pattern.feedback && intent != Intent::kReject) {
          throw ConfigError("only Reject patterns may carry feedback");
        }
        pattern.lemmas = ToPhrase(lem, pattern.text);
        reg.patterns_.push_back(std::move(pattern));
      }
    }
    reg.negation_ = PhraseList(lem, json, "negation_cues");
    reg.removal_ = PhraseList(lem, json, "removal_cues");
    reg.soft_removal_ = PhraseList(lem, json, "soft_removal_cues");
    reg.coordinators_ = PhraseList(lem, json, "coordinators");
    reg.clause_breaks_ = PhraseList(lem, json, "clause_breaks");
    reg.director_ = PhraseList(lem, json, "director_cues");
    reg.actor_ = PhraseList(lem, json, "actor_cues");
    reg.dont_care_ = PhraseList(lem, json, "dont_care_cues");
    reg.title_ = PhraseList(lem, json, "title_cues");
    if (json.contains("temporal_cues")) {
      const Json& t = json.at("temporal_cues");
      reg.before_ = PhraseList(lem, t, "before");
      reg.after_ = PhraseList(lem, t, "after");
      reg.since_ = PhraseList(lem, t, "since");
      reg.between_ = PhraseList(lem, t, "between");
    }
    if (json.contains("stopwords")) {
      for (const Json& w : json.at("stopwords")) {
        reg.stopwords_.insert(lem.Lemma(w.get<std::string>()));
      }
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("pattern registry: ") + e.what());
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("pattern registry: ") + e.what());
  }
  for (Intent intent :
       {Intent::kInquire, Intent::kAccept, Intent::kReject,
        Intent::kContinueRecommendation, Intent::kHi, Intent::kAcknowledge,
        Intent::kDeny, Intent::kBye}) {
    const bool found =
        std::any_of(reg.patterns_.begin(), reg.patterns_.end(),
                    [intent](const IntentPattern& p) { return p.intent == intent; });
    if (!found) {
      throw ConfigError("no pattern for user intent " +
                        std::string(IntentToString(intent)));
    }
  }
  return reg;
}

PatternRegistry PatternRegistry::Load(std::istream& in) {
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("pattern registry: ") + e.what());
  }
  return FromJson(json);
}

PatternRegistry PatternRegistry::LoadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pattern registry " + path.string());
  return Load(in);
}

std::vector<size_t> FindPhrase(const std::vector<Token>& tokens,
                               const Phrase& phrase) {
  std::vector<size_t> hits;
  if (phrase.empty() || phrase.size() > tokens.size()) return hits;
  for (size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
    bool match = true;
    for (size_t k = 0; k < phrase.size() && match; ++k) {
      match = tokens[i + k].lemma == phrase[k];
    }
    if (match) hits.push_back(i);
  }
  return hits;
}

bool PhraseAt(const std::vector<Token>& tokens, size_t at,
              const std::vector<Phrase>& phrases, size_t* length) {
  for (const Phrase& phrase : phrases) {
    if (at + phrase.size() > tokens.size()) continue;
    bool match = true;
    for (size_t k = 0; k < phrase.size() && match; ++k) {
      match = tokens[at + k].lemma == phrase[k];
    }
    if (match) {
      if (length != nullptr) *length = phrase.size();
      return true;
    }
  }
  return false;
}

}  // namespace moviechat
