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

#ifndef MOVIECHAT_NLG_GENERATOR_H_
#define MOVIECHAT_NLG_GENERATOR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moviechat/catalog/catalog.h"
#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_context.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/core/information_need.h"
#include "moviechat/core/serialization.h"
#include "moviechat/nlg/template_set.h"

namespace moviechat {

// A reply option. Either carries a structured user act that bypasses the
// NLU, or a session command such as "/restart".
struct ButtonSpec {
  std::string label;
  std::optional<DialogueAct> payload;
  std::optional<std::string> command;

  bool operator==(const ButtonSpec&) const = default;
};

// {"label": ..., "payload": <act>} or {"label": ..., "payload": {"command":
// "/restart"}}.
Json ToJson(const ButtonSpec& button);
ButtonSpec ButtonFromJson(const Json& json);

enum class RecapMode { kNever, kElicit, kEveryTurn };

struct NlgOptions {
  RecapMode recap = RecapMode::kElicit;
};

// Per-act render seed derived from a session seed, turn and act position.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t turn,
                      std::uint64_t index);

class Generator {
 public:
  // `catalog` supplies display spellings and item details; may be null, in
  // which case canonical values are title-cased.
  Generator(const TemplateSet& templates, const Catalog* catalog,
            NlgOptions options = {});

  // Picks one of the act's templates uniformly with the seeded generator and
  // fills its placeholders. Throws ConfigError for a missing template or an
  // unbound placeholder.
  std::string Render(const DialogueAct& act, const DialogueState& state,
                     std::uint64_t seed) const;

  // Index of the template Render would pick.
  size_t Choose(size_t n, std::uint64_t seed) const;

  // Readable recap of the need in arrival order.
  std::string SummarizeIn(const InformationNeed& need) const;

  // Whether the recap accompanies a turn with these agent acts.
  bool WantsRecap(const std::vector<DialogueAct>& acts) const;

  // Stage-dependent reply options.
  std::vector<ButtonSpec> OptionsFor(const DialogueState& state,
                                     const DialogueContext& context) const;

  const TemplateSet& templates() const { return templates_; }

 private:
  std::string Display(SlotName slot, const Value& value) const;
  std::string JoinValues(const std::vector<Constraint>& constraints) const;
  // Recap body without prefix; empty for an empty need.
  std::string Describe(const InformationNeed& need) const;

  const TemplateSet& templates_;
  const Catalog* catalog_;
  NlgOptions options_;
};

// "a", "a and b", "a, b and c".
std::string JoinList(const std::vector<std::string>& parts,
                     const std::string& last = " and ");

}  // namespace moviechat

#endif  // MOVIECHAT_NLG_GENERATOR_H_
