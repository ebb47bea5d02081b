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

#ifndef MOVIECHAT_CORE_SERIALIZATION_H_
#define MOVIECHAT_CORE_SERIALIZATION_H_

#include "json.hpp"
#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_context.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/core/information_need.h"

namespace moviechat {

// Canonical structured-text form shared by the wire protocol, session
// snapshots and transcripts. Field order is fixed so that dumps are
// byte-stable.
using Json = nlohmann::ordered_json;

Json ValueToJson(const Value& value);
Value ValueFromJson(const Json& json);

Json ToJson(const Constraint& constraint);
Json ToJson(const DialogueAct& act);
Json ToJson(const InformationNeed& need);
Json ToJson(const DialogueContext& context);
Json ToJson(const DialogueState& state);

// The parsers throw ValidationError on malformed input; parsed constraints
// and acts go through MakeConstraint/ValidateAct.
Constraint ConstraintFromJson(const Json& json);
DialogueAct ActFromJson(const Json& json);
InformationNeed NeedFromJson(const Json& json);
DialogueContext ContextFromJson(const Json& json);
DialogueState StateFromJson(const Json& json);

Json ActsToJson(const std::vector<DialogueAct>& acts);
std::vector<DialogueAct> ActsFromJson(const Json& json);

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_SERIALIZATION_H_
