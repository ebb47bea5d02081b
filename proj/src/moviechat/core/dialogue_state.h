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

#ifndef MOVIECHAT_CORE_DIALOGUE_STATE_H_
#define MOVIECHAT_CORE_DIALOGUE_STATE_H_

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/information_need.h"

namespace moviechat {

enum class AgentStage {
  kGreeting,
  kEliciting,
  kRecommending,
  kInforming,
  kAwaitingFeedback,
  kClosing,
};

inline constexpr std::array<AgentStage, 6> kAllStages = {
    AgentStage::kGreeting,     AgentStage::kEliciting,
    AgentStage::kRecommending, AgentStage::kInforming,
    AgentStage::kAwaitingFeedback, AgentStage::kClosing,
};

std::string_view StageToString(AgentStage stage);
AgentStage ParseStage(std::string_view name);

// Stages in which a recommendation is on the table.
inline bool HasRecommendationStage(AgentStage stage) {
  return stage == AgentStage::kRecommending ||
         stage == AgentStage::kInforming ||
         stage == AgentStage::kAwaitingFeedback;
}

struct DialogueState {
  std::string session_id;
  std::vector<DialogueAct> last_user_acts;
  std::vector<DialogueAct> last_agent_acts;
  InformationNeed info_need;
  // Highest-ranked matches, truncated to a cap; matching_count is exact.
  std::vector<std::string> matching_items;
  std::int64_t matching_count = 0;
  std::optional<std::string> current_recommendation;
  AgentStage agent_stage = AgentStage::kGreeting;
  int elicit_count = 0;
  std::set<SlotName> inquired_attributes;

  bool operator==(const DialogueState&) const = default;
};

// Blank state carrying the same session id.
DialogueState Restart(const DialogueState& state);

// Checks the structural invariants that hold for every state: the
// recommendation is set exactly in recommendation stages, elicit_count is
// within [0, max_elicit]. Throws ValidationError.
void CheckStateInvariants(const DialogueState& state, int max_elicit);

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_DIALOGUE_STATE_H_
