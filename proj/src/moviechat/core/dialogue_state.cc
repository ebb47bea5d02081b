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

#include "moviechat/core/dialogue_state.h"

#include <array>
#include <utility>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

constexpr std::array<std::pair<AgentStage, std::string_view>, 6> kStageNames =
    {{
        {AgentStage::kGreeting, "greeting"},
        {AgentStage::kEliciting, "eliciting"},
        {AgentStage::kRecommending, "recommending"},
        {AgentStage::kInforming, "informing"},
        {AgentStage::kAwaitingFeedback, "awaiting_feedback"},
        {AgentStage::kClosing, "closing"},
    }};

}  // namespace

std::string_view StageToString(AgentStage stage) {
  for (const auto& [s, name] : kStageNames) {
    if (s == stage) return name;
  }
  return "?";
}

AgentStage ParseStage(std::string_view name) {
  for (const auto& [stage, n] : kStageNames) {
    if (n == name) return stage;
  }
  throw ValidationError("unknown agent stage '" + std::string(name) + "'");
}

DialogueState Restart(const DialogueState& state) {
  DialogueState blank;
  blank.session_id = state.session_id;
  return blank;
}

void CheckStateInvariants(const DialogueState& state, int max_elicit) {
  if (state.current_recommendation.has_value() !=
      HasRecommendationStage(state.agent_stage)) {
    throw ValidationError(
        "current_recommendation must be set exactly in recommendation stages "
        "(stage " +
        std::string(StageToString(state.agent_stage)) + ")");
  }
  if (state.elicit_count < 0 || state.elicit_count > max_elicit) {
    throw ValidationError("elicit_count " + std::to_string(state.elicit_count) +
                          " outside [0, " + std::to_string(max_elicit) + "]");
  }
  if (!state.current_recommendation && !state.inquired_attributes.empty()) {
    throw ValidationError("inquired attributes without a recommendation");
  }
}

}  // namespace moviechat
