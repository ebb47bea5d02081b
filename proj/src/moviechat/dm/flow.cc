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

#include "moviechat/dm/flow.h"

namespace moviechat {

const std::set<StageEdge>& FlowEdges() {
  using S = AgentStage;
  static const auto* edges = new std::set<StageEdge>{
      {S::kGreeting, S::kGreeting},
      {S::kGreeting, S::kEliciting},
      {S::kGreeting, S::kRecommending},
      {S::kGreeting, S::kClosing},
      {S::kEliciting, S::kEliciting},
      {S::kEliciting, S::kRecommending},
      {S::kEliciting, S::kClosing},
      {S::kRecommending, S::kRecommending},
      {S::kRecommending, S::kInforming},
      {S::kRecommending, S::kAwaitingFeedback},
      {S::kRecommending, S::kEliciting},
      {S::kRecommending, S::kClosing},
      {S::kInforming, S::kInforming},
      {S::kInforming, S::kRecommending},
      {S::kInforming, S::kAwaitingFeedback},
      {S::kInforming, S::kEliciting},
      {S::kInforming, S::kClosing},
      {S::kAwaitingFeedback, S::kAwaitingFeedback},
      {S::kAwaitingFeedback, S::kRecommending},
      {S::kAwaitingFeedback, S::kInforming},
      {S::kAwaitingFeedback, S::kEliciting},
      {S::kAwaitingFeedback, S::kClosing},
  };
  return *edges;
}

bool IsFlowEdge(AgentStage from, AgentStage to) {
  return FlowEdges().count({from, to}) > 0;
}

const std::vector<SlotName>& InformableSlots() {
  static const auto* slots = new std::vector<SlotName>{
      SlotName::kPlot,        SlotName::kGenres,   SlotName::kActors,
      SlotName::kDirectors,   SlotName::kReleaseYear, SlotName::kDuration,
      SlotName::kRating,      SlotName::kKeywords, SlotName::kTitle};
  return *slots;
}

std::vector<DialogueAct> EmittableAgentActs(const PolicyConfig& config) {
  std::vector<DialogueAct> acts;
  acts.push_back(AgentAct(Intent::kWelcome));
  for (SlotName slot : config.elicitation_order) {
    acts.push_back(AgentAct(Intent::kElicit, {SlotRef(slot)}));
  }
  DialogueAct too_many = AgentAct(Intent::kTooManyResults);
  too_many.count = config.result_threshold + 1;
  acts.push_back(too_many);
  DialogueAct recommend = AgentAct(Intent::kRecommend);
  recommend.item = "?";
  acts.push_back(recommend);
  DialogueAct none = AgentAct(Intent::kNoResults);
  none.count = 0;
  acts.push_back(none);
  DialogueAct exhausted = AgentAct(Intent::kNoResults);
  exhausted.count = 1;
  acts.push_back(exhausted);
  acts.push_back(AgentAct(Intent::kInform));
  for (SlotName slot : InformableSlots()) {
    Value value;
    if (IsNumeric(slot)) {
      value = slot == SlotName::kRating ? Value(7.5) : Value(std::int64_t{90});
    } else {
      value = std::string("x");
    }
    acts.push_back(AgentAct(Intent::kInform,
                            {MakeConstraint(slot, Operator::kEq, value)}));
  }
  acts.push_back(AgentAct(Intent::kAcknowledge));
  acts.push_back(AgentAct(Intent::kCantHelp));
  acts.push_back(AgentAct(Intent::kBye));
  return acts;
}

}  // namespace moviechat
