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

#include "moviechat/nlu/nlu.h"

#include <algorithm>

namespace moviechat {
namespace {

struct PatternHit {
  const IntentPattern* pattern;
  size_t at;
};

}  // namespace

IntentMatch DetectIntent(const std::vector<Token>& tokens, AgentStage stage,
                         const PatternRegistry& registry) {
  std::vector<PatternHit> hits;
  for (const IntentPattern& p : registry.patterns()) {
    if (p.gated() && p.stages.count(stage) == 0) continue;
    for (size_t at : FindPhrase(tokens, p.lemmas)) hits.push_back({&p, at});
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const PatternHit& a, const PatternHit& b) {
                     if (a.pattern->gated() != b.pattern->gated()) {
                       return a.pattern->gated();
                     }
                     if (a.pattern->lemmas.size() != b.pattern->lemmas.size()) {
                       return a.pattern->lemmas.size() > b.pattern->lemmas.size();
                     }
                     if (a.pattern->order != b.pattern->order) {
                       return a.pattern->order < b.pattern->order;
                     }
                     return a.at < b.at;
                   });
  std::vector<bool> claimed(tokens.size(), false);
  std::vector<PatternHit> kept;
  for (const PatternHit& hit : hits) {
    const size_t end = hit.at + hit.pattern->lemmas.size();
    bool free = true;
    for (size_t k = hit.at; k < end; ++k) free = free && !claimed[k];
    if (!free) continue;
    for (size_t k = hit.at; k < end; ++k) claimed[k] = true;
    kept.push_back(hit);
  }
  IntentMatch match;
  if (kept.empty()) return match;
  const PatternHit& best = *std::min_element(
      kept.begin(), kept.end(), [](const PatternHit& a, const PatternHit& b) {
        if (a.pattern->gated() != b.pattern->gated()) return a.pattern->gated();
        return a.pattern->order < b.pattern->order;
      });
  match.intent = best.pattern->intent;
  match.gated = best.pattern->gated();
  match.feedback = best.pattern->feedback;
  if (match.intent == Intent::kInquire) {
    std::sort(kept.begin(), kept.end(),
              [](const PatternHit& a, const PatternHit& b) { return a.at < b.at; });
    for (const PatternHit& hit : kept) {
      if (hit.pattern->intent != Intent::kInquire || !hit.pattern->slot) continue;
      if (std::find(match.slots.begin(), match.slots.end(), *hit.pattern->slot) ==
          match.slots.end()) {
        match.slots.push_back(*hit.pattern->slot);
      }
    }
  }
  return match;
}

Intent DetectIntent(std::string_view utterance, AgentStage stage,
                    const PatternRegistry& registry) {
  return DetectIntent(registry.lemmatizer().Tokenize(utterance), stage,
                      registry)
      .intent;
}

std::vector<DialogueAct> ActsFromAnnotations(
    const std::vector<Annotation>& annotations) {
  std::vector<DialogueAct> acts;
  auto act_for = [&](Intent intent) -> DialogueAct& {
    for (DialogueAct& act : acts) {
      if (act.intent == intent) return act;
    }
    acts.push_back(UserAct(intent));
    return acts.back();
  };
  for (const Annotation& a : annotations) {
    DialogueAct& act =
        act_for(a.removal ? Intent::kRemovePreference : Intent::kReveal);
    const Constraint c = MakeConstraint(a.slot, a.op, a.value);
    if (std::find(act.constraints.begin(), act.constraints.end(), c) ==
        act.constraints.end()) {
      act.constraints.push_back(c);
    }
  }
  return acts;
}

std::optional<SlotName> ElicitedSlot(const DialogueState& state) {
  for (auto it = state.last_agent_acts.rbegin();
       it != state.last_agent_acts.rend(); ++it) {
    if (it->intent == Intent::kElicit && !it->constraints.empty()) {
      return it->constraints.front().slot;
    }
  }
  return std::nullopt;
}

Nlu::Nlu(const Catalog& catalog, const PatternRegistry& registry,
         NluOptions options)
    : registry_(registry), filler_(catalog, registry, options) {}

std::vector<DialogueAct> Nlu::Parse(std::string_view utterance,
                                    const DialogueState& state) const {
  const std::vector<Token> tokens = registry_.lemmatizer().Tokenize(utterance);
  const std::vector<Annotation> annotations =
      filler_.Fill(tokens, &state.info_need);
  const IntentMatch match = DetectIntent(tokens, state.agent_stage, registry_);

  if (!annotations.empty()) {
    std::vector<DialogueAct> acts;
    // Feedback on the current recommendation can ride along with new
    // preferences ("seen it, something with Tom Hanks maybe").
    if (match.gated && (match.intent == Intent::kAccept ||
                        match.intent == Intent::kReject ||
                        match.intent == Intent::kContinueRecommendation)) {
      DialogueAct feedback = UserAct(match.intent);
      if (match.intent == Intent::kReject) feedback.feedback = match.feedback;
      acts.push_back(std::move(feedback));
    }
    for (DialogueAct& act : ActsFromAnnotations(annotations)) {
      acts.push_back(std::move(act));
    }
    return acts;
  }

  if (state.agent_stage == AgentStage::kEliciting) {
    const auto slot = ElicitedSlot(state);
    bool dont_care = false;
    for (size_t k = 0; k < tokens.size() && !dont_care; ++k) {
      dont_care = PhraseAt(tokens, k, registry_.dont_care_cues());
    }
    if (slot && dont_care) {
      return {UserAct(Intent::kReveal,
                      {MakeConstraint(*slot, Operator::kEq, DontCare{})})};
    }
  }

  DialogueAct act = UserAct(match.intent);
  if (match.intent == Intent::kInquire) {
    for (SlotName slot : match.slots) act.constraints.push_back(SlotRef(slot));
  }
  if (match.intent == Intent::kReject) act.feedback = match.feedback;
  return {act};
}

}  // namespace moviechat
