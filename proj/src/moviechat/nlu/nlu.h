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

#ifndef MOVIECHAT_NLU_NLU_H_
#define MOVIECHAT_NLU_NLU_H_

#include <optional>
#include <string_view>
#include <vector>

#include "moviechat/catalog/catalog.h"
#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/nlu/pattern_registry.h"
#include "moviechat/nlu/slot_filler.h"

namespace moviechat {

struct IntentMatch {
  Intent intent = Intent::kUnrecognized;
  // Inquire: attributes asked about, in utterance order.
  std::vector<SlotName> slots;
  std::optional<FeedbackLabel> feedback;
  // The winning pattern is restricted to the current stage.
  bool gated = false;
};

// Pattern-based intent detection. Patterns are matched on lemmas, longest
// first, each token claimed by at most one pattern. Among the surviving
// matches stage-gated patterns outrank global ones, then registry order
// decides. Returns kUnrecognized when nothing matches.
IntentMatch DetectIntent(const std::vector<Token>& tokens, AgentStage stage,
                         const PatternRegistry& registry);
Intent DetectIntent(std::string_view utterance, AgentStage stage,
                    const PatternRegistry& registry);

// Turns a user utterance into dialogue acts given the current state.
class Nlu {
 public:
  Nlu(const Catalog& catalog, const PatternRegistry& registry,
      NluOptions options = {});

  // Never throws on user input: unintelligible text yields a single
  // Unrecognized act.
  std::vector<DialogueAct> Parse(std::string_view utterance,
                                 const DialogueState& state) const;

  const SlotFiller& slot_filler() const { return filler_; }
  const PatternRegistry& registry() const { return registry_; }

 private:
  const PatternRegistry& registry_;
  SlotFiller filler_;
};

// Builds Reveal / RemovePreference acts from resolved annotations, ordered by
// first appearance in the utterance.
std::vector<DialogueAct> ActsFromAnnotations(
    const std::vector<Annotation>& annotations);

// Slot named by the most recent agent Elicit, if any.
std::optional<SlotName> ElicitedSlot(const DialogueState& state);

}  // namespace moviechat

#endif  // MOVIECHAT_NLU_NLU_H_
