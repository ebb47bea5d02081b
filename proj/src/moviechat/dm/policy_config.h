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

#ifndef MOVIECHAT_DM_POLICY_CONFIG_H_
#define MOVIECHAT_DM_POLICY_CONFIG_H_

#include <filesystem>
#include <istream>
#include <vector>

#include "moviechat/core/serialization.h"
#include "moviechat/core/slot.h"

namespace moviechat {

struct PolicyConfig {
  // Keep eliciting while more items than this match.
  int result_threshold = 20;
  int max_elicit_questions = 5;
  std::vector<SlotName> elicitation_order = {
      SlotName::kGenres, SlotName::kKeywords, SlotName::kActors,
      SlotName::kDirectors, SlotName::kReleaseYear};
  // Report the match count (TooManyResults) before eliciting.
  bool count_disclosure = true;
  // Number of ranked ids kept in DialogueState::matching_items.
  int matching_cap = 50;
  // Several '=' values on one multi-valued slot match any instead of all.
  bool disjunctive_eq = false;
};

// Throws ConfigError on duplicates, non-elicitable slots or bad thresholds.
void ValidatePolicyConfig(const PolicyConfig& config);

// Missing keys keep their defaults.
PolicyConfig PolicyConfigFromJson(const Json& json);
PolicyConfig LoadPolicyConfig(std::istream& in);
PolicyConfig LoadPolicyConfigFile(const std::filesystem::path& path);
Json ToJson(const PolicyConfig& config);

}  // namespace moviechat

#endif  // MOVIECHAT_DM_POLICY_CONFIG_H_
