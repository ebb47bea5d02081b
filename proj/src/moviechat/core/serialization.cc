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

#include "moviechat/core/serialization.h"

#include <string>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

const Json& Field(const Json& json, const char* name) {
  if (!json.is_object() || !json.contains(name)) {
    throw ValidationError(std::string("missing field '") + name + "'");
  }
  return json.at(name);
}

std::string StringField(const Json& json, const char* name) {
  const Json& field = Field(json, name);
  if (!field.is_string()) {
    throw ValidationError(std::string("field '") + name + "' must be a string");
  }
  return field.get<std::string>();
}

}  // namespace

Json ValueToJson(const Value& value) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(const std::string& s) const { return s; }
    Json operator()(std::int64_t i) const { return i; }
    Json operator()(double d) const { return d; }
    Json operator()(DontCare) const { return Json{{"dont_care", true}}; }
  };
  return std::visit(Visitor{}, value);
}

Value ValueFromJson(const Json& json) {
  if (json.is_null()) return std::monostate{};
  if (json.is_string()) return json.get<std::string>();
  if (json.is_number_integer()) return json.get<std::int64_t>();
  if (json.is_number_float()) return json.get<double>();
  if (json.is_object() && json.value("dont_care", false)) return DontCare{};
  throw ValidationError("unsupported constraint value " + json.dump());
}

Json ToJson(const Constraint& c) {
  Json out;
  out["slot"] = SlotToString(c.slot);
  out["op"] = OperatorSymbol(c.op);
  out["value"] = ValueToJson(c.value);
  return out;
}

Constraint ConstraintFromJson(const Json& json) {
  const SlotName slot = ParseSlot(StringField(json, "slot"));
  const Operator op =
      json.contains("op") ? ParseOperator(StringField(json, "op"))
                          : Operator::kEq;
  Value value = json.contains("value") ? ValueFromJson(json.at("value"))
                                       : Value{std::monostate{}};
  return MakeConstraint(slot, op, std::move(value));
}

Json ToJson(const DialogueAct& act) {
  Json out;
  out["intent"] = IntentToString(act.intent);
  out["author"] = AuthorToString(act.author);
  out["constraints"] = Json::array();
  for (const Constraint& c : act.constraints) {
    out["constraints"].push_back(ToJson(c));
  }
  if (act.item) out["item"] = *act.item;
  if (act.count) out["count"] = *act.count;
  if (act.feedback) out["feedback"] = FeedbackToString(*act.feedback);
  return out;
}

DialogueAct ActFromJson(const Json& json) {
  DialogueAct act;
  act.intent = ParseIntent(StringField(json, "intent"));
  act.author = ParseAuthor(StringField(json, "author"));
  if (json.contains("constraints")) {
    const Json& list = json.at("constraints");
    if (!list.is_array()) throw ValidationError("constraints must be a list");
    for (const Json& c : list) act.constraints.push_back(ConstraintFromJson(c));
  }
  if (json.contains("item")) act.item = StringField(json, "item");
  if (json.contains("count")) {
    if (!json.at("count").is_number_integer()) {
      throw ValidationError("count must be an integer");
    }
    act.count = json.at("count").get<std::int64_t>();
  }
  if (json.contains("feedback")) {
    act.feedback = ParseFeedback(StringField(json, "feedback"));
  }
  ValidateAct(act);
  return act;
}

Json ActsToJson(const std::vector<DialogueAct>& acts) {
  Json out = Json::array();
  for (const DialogueAct& act : acts) out.push_back(ToJson(act));
  return out;
}

std::vector<DialogueAct> ActsFromJson(const Json& json) {
  if (!json.is_array()) throw ValidationError("acts must be a list");
  std::vector<DialogueAct> acts;
  for (const Json& a : json) acts.push_back(ActFromJson(a));
  return acts;
}

Json ToJson(const InformationNeed& need) {
  Json out;
  out["constraints"] = Json::array();
  for (const Constraint& c : need.constraints()) {
    out["constraints"].push_back(ToJson(c));
  }
  out["dont_care"] = Json::array();
  for (SlotName slot : need.dont_care()) {
    out["dont_care"].push_back(SlotToString(slot));
  }
  return out;
}

InformationNeed NeedFromJson(const Json& json) {
  InformationNeed need;
  for (const Json& c : Field(json, "constraints")) {
    need.Add(ConstraintFromJson(c));
  }
  for (const Json& s : Field(json, "dont_care")) {
    need.MarkDontCare(ParseSlot(s.get<std::string>()));
  }
  return need;
}

Json ToJson(const DialogueContext& context) {
  Json out = Json::object();
  for (const auto& [item, labels] : context.entries()) {
    Json list = Json::array();
    for (FeedbackLabel label : labels) list.push_back(FeedbackToString(label));
    out[item] = std::move(list);
  }
  return out;
}

DialogueContext ContextFromJson(const Json& json) {
  if (!json.is_object()) throw ValidationError("context must be an object");
  DialogueContext::Entries entries;
  for (const auto& [item, labels] : json.items()) {
    auto& list = entries[item];
    for (const Json& label : labels) {
      list.push_back(ParseFeedback(label.get<std::string>()));
    }
  }
  return DialogueContext(std::move(entries));
}

Json ToJson(const DialogueState& state) {
  Json out;
  out["session_id"] = state.session_id;
  out["last_user_acts"] = ActsToJson(state.last_user_acts);
  out["last_agent_acts"] = ActsToJson(state.last_agent_acts);
  out["info_need"] = ToJson(state.info_need);
  out["matching_items"] = state.matching_items;
  out["matching_count"] = state.matching_count;
  out["current_recommendation"] =
      state.current_recommendation ? Json(*state.current_recommendation)
                                   : Json(nullptr);
  out["agent_stage"] = StageToString(state.agent_stage);
  out["elicit_count"] = state.elicit_count;
  out["inquired_attributes"] = Json::array();
  for (SlotName slot : state.inquired_attributes) {
    out["inquired_attributes"].push_back(SlotToString(slot));
  }
  return out;
}

DialogueState StateFromJson(const Json& json) {
  DialogueState state;
  state.session_id = StringField(json, "session_id");
  state.last_user_acts = ActsFromJson(Field(json, "last_user_acts"));
  state.last_agent_acts = ActsFromJson(Field(json, "last_agent_acts"));
  state.info_need = NeedFromJson(Field(json, "info_need"));
  for (const Json& id : Field(json, "matching_items")) {
    state.matching_items.push_back(id.get<std::string>());
  }
  state.matching_count = Field(json, "matching_count").get<std::int64_t>();
  const Json& rec = Field(json, "current_recommendation");
  if (!rec.is_null()) state.current_recommendation = rec.get<std::string>();
  state.agent_stage = ParseStage(StringField(json, "agent_stage"));
  state.elicit_count = Field(json, "elicit_count").get<int>();
  for (const Json& s : Field(json, "inquired_attributes")) {
    state.inquired_attributes.insert(ParseSlot(s.get<std::string>()));
  }
  return state;
}

}  // namespace moviechat
