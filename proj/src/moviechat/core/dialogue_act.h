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

#ifndef MOVIECHAT_CORE_DIALOGUE_ACT_H_
#define MOVIECHAT_CORE_DIALOGUE_ACT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moviechat/core/slot.h"

namespace moviechat {

// Communicative function of a turn. Acknowledge and Bye are shared by both
// roles; every other intent belongs to exactly one role.
enum class Intent {
  // User intents.
  kReveal,
  kRemovePreference,
  kInquire,
  kAccept,
  kReject,
  kContinueRecommendation,
  kHi,
  kDeny,
  // Sentinel for unintelligible user input. The policy answers it with
  // CantHelp.
  kUnrecognized,
  // Agent intents.
  kElicit,
  kTooManyResults,
  kRecommend,
  kNoResults,
  kInform,
  kWelcome,
  kCantHelp,
  // Both roles.
  kAcknowledge,
  kBye,
};

enum class Author { kUser, kAgent };

std::string_view IntentToString(Intent intent);
Intent ParseIntent(std::string_view name);
std::string_view AuthorToString(Author author);
Author ParseAuthor(std::string_view name);

bool IsUserIntent(Intent intent);
bool IsAgentIntent(Intent intent);

enum class FeedbackLabel { kAccepted, kRejected, kDontLike, kWatched, kInquired };

std::string_view FeedbackToString(FeedbackLabel label);
FeedbackLabel ParseFeedback(std::string_view name);

// One (slot, op, value) triple. Use MakeConstraint to get a validated,
// canonicalized instance.
struct Constraint {
  SlotName slot = SlotName::kGenres;
  Operator op = Operator::kEq;
  Value value;

  bool operator==(const Constraint&) const = default;
};

// Validates operator/slot compatibility and value kind, canonicalizes string
// values and normalizes numbers (integral slots -> int64, rating -> double).
// Throws ValidationError.
Constraint MakeConstraint(SlotName slot, Operator op, Value value);

// Empty-valued constraint naming a slot (Elicit, Inquire).
inline Constraint SlotRef(SlotName slot) {
  return Constraint{slot, Operator::kEq, std::monostate{}};
}

struct DialogueAct {
  Intent intent = Intent::kUnrecognized;
  Author author = Author::kUser;
  std::vector<Constraint> constraints;
  // Recommend: the recommended item.
  std::optional<std::string> item;
  // TooManyResults / NoResults: number of matching items.
  std::optional<std::int64_t> count;
  // Reject: which kind of rejection (watched, dont_like, rejected).
  std::optional<FeedbackLabel> feedback;

  bool operator==(const DialogueAct&) const = default;
};

DialogueAct UserAct(Intent intent, std::vector<Constraint> constraints = {});
DialogueAct AgentAct(Intent intent, std::vector<Constraint> constraints = {});

// Checks the role partition and per-intent shape rules. Throws
// ValidationError.
void ValidateAct(const DialogueAct& act);

// Compact human-readable form, e.g. "Reveal(genres=action, directors!=x)".
std::string ActToString(const DialogueAct& act);

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_DIALOGUE_ACT_H_
