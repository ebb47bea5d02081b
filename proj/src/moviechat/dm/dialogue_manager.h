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

#ifndef MOVIECHAT_DM_DIALOGUE_MANAGER_H_
#define MOVIECHAT_DM_DIALOGUE_MANAGER_H_

#include <optional>
#include <string>
#include <vector>

#include "moviechat/catalog/catalog.h"
#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_context.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/dm/policy_config.h"

namespace moviechat {

struct TurnOutcome {
  std::vector<DialogueAct> agent_acts;
  DialogueState new_state;
  DialogueContext new_context;
  // Rule firings, filled when tracing is on.
  std::vector<std::string> trace;
  // Non-fatal oddities, e.g. removing a preference that was never stated.
  std::vector<std::string> notes;
};

// Dialogue state tracker plus policy. Stateless apart from its references to
// the catalog (which must outlive it) and config: every call is a pure
// function of its arguments.
class DialogueManager {
 public:
  DialogueManager(const Catalog& catalog, PolicyConfig config = {});

  // Opening turn of a fresh conversation: Welcome.
  TurnOutcome Start(const DialogueState& state,
                    const DialogueContext& context) const;

  // One user turn: (i) apply the user acts to the information need and the
  // context, (ii) recompute the matching items, (iii) choose agent acts.
  TurnOutcome UpdateState(const DialogueState& state,
                          const DialogueContext& context,
                          const std::vector<DialogueAct>& user_acts) const;

  // Policy rules on a state whose matches are current: NoResults when
  // nothing matches, TooManyResults + Elicit while too many match and
  // questions remain, Recommend otherwise. Updates `state` and `context`.
  std::vector<DialogueAct> NextAgentActs(DialogueState& state,
                                         DialogueContext& context,
                                         std::vector<std::string>* trace =
                                             nullptr) const;

  // Best-ranked match that is not in the context.
  std::optional<std::string> Recommend(const DialogueState& state,
                                       const DialogueContext& context) const;

  // Match not in the context most similar (Jaccard over genres and
  // keywords) to `accepted`; ties go to the better-ranked item.
  std::optional<std::string> SimilarRecommendation(
      const DialogueState& state, const DialogueContext& context,
      const std::string& accepted) const;

  // Recomputes matching_items / matching_count for the state's need.
  void RefreshMatches(DialogueState& state) const;

  // The next slot the policy would elicit, if any.
  std::optional<SlotName> NextElicitSlot(const DialogueState& state) const;

  // Inform act(s) describing `slot` of `item`; an empty optional slot asks
  // for the overview.
  DialogueAct InformAct(const Item& item, std::optional<SlotName> slot) const;

  const PolicyConfig& config() const { return config_; }
  const Catalog& catalog() const { return catalog_; }
  void set_trace(bool trace) { trace_ = trace; }

 private:
  FilterOptions filter_options() const {
    return FilterOptions{config_.disjunctive_eq};
  }

  const Catalog& catalog_;
  PolicyConfig config_;
  bool trace_ = false;
};

// Stage the agent is in after emitting `acts` from `previous`.
AgentStage StageAfter(AgentStage previous, const std::vector<DialogueAct>& acts,
                      bool has_recommendation);

// Jaccard similarity of the genre and keyword sets of two items.
double ItemSimilarity(const Item& a, const Item& b);

}  // namespace moviechat

#endif  // MOVIECHAT_DM_DIALOGUE_MANAGER_H_
