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

#ifndef MOVIECHAT_NLU_PATTERN_REGISTRY_H_
#define MOVIECHAT_NLU_PATTERN_REGISTRY_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/core/serialization.h"
#include "moviechat/nlu/lemmatizer.h"

namespace moviechat {

// A lemmatized phrase: sequence of lemmas matched contiguously.
using Phrase = std::vector<std::string>;

struct IntentPattern {
  Intent intent = Intent::kUnrecognized;
  std::string text;
  Phrase lemmas;
  // Empty means the pattern applies in every stage.
  std::set<AgentStage> stages;
  // Inquire: attribute asked about.
  std::optional<SlotName> slot;
  // Reject: kind of rejection.
  std::optional<FeedbackLabel> feedback;
  // Position in the registry; lower wins ties.
  int order = 0;

  bool gated() const { return !stages.empty(); }
};

// Trigger phrases for intents plus the cue lists used by slot filling.
// Everything is stored lemmatized with the registry's own lemmatizer.
class PatternRegistry {
 public:
  // Parses the registry file format (see docs/data_files.md). Throws
  // ConfigError for malformed input or when a user intent has no pattern.
  static PatternRegistry FromJson(const Json& json);
  static PatternRegistry Load(std::istream& in);
  static PatternRegistry LoadFile(const std::filesystem::path& path);

  const Lemmatizer& lemmatizer() const { return lemmatizer_; }
  const std::vector<IntentPattern>& patterns() const { return patterns_; }

  const std::vector<Phrase>& negation_cues() const { return negation_; }
  const std::vector<Phrase>& removal_cues() const { return removal_; }
  const std::vector<Phrase>& soft_removal_cues() const { return soft_removal_; }
  const std::vector<Phrase>& coordinators() const { return coordinators_; }
  const std::vector<Phrase>& clause_breaks() const { return clause_breaks_; }
  const std::vector<Phrase>& director_cues() const { return director_; }
  const std::vector<Phrase>& actor_cues() const { return actor_; }
  const std::vector<Phrase>& before_cues() const { return before_; }
  const std::vector<Phrase>& after_cues() const { return after_; }
  const std::vector<Phrase>& since_cues() const { return since_; }
  const std::vector<Phrase>& between_cues() const { return between_; }
  const std::vector<Phrase>& dont_care_cues() const { return dont_care_; }
  const std::vector<Phrase>& title_cues() const { return title_; }
  bool IsStopword(const std::string& lemma) const {
    return stopwords_.count(lemma) > 0;
  }

 private:
  Lemmatizer lemmatizer_;
  std::vector<IntentPattern> patterns_;
  std::vector<Phrase> negation_, removal_, soft_removal_, coordinators_,
      clause_breaks_, director_, actor_, before_, after_, since_, between_,
      dont_care_, title_;
  std::set<std::string> stopwords_;
};

// Start positions of `phrase` in the lemma sequence of `tokens`.
std::vector<size_t> FindPhrase(const std::vector<Token>& tokens,
                               const Phrase& phrase);

// True if any phrase of `phrases` matches at position `at`; the match length
// goes to `length`.
bool PhraseAt(const std::vector<Token>& tokens, size_t at,
              const std::vector<Phrase>& phrases, size_t* length = nullptr);

}  // namespace moviechat

#endif  // MOVIECHAT_NLU_PATTERN_REGISTRY_H_
