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

#include "moviechat/core/dialogue_act.h"

#include <array>
#include <cmath>
#include <utility>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

struct IntentName {
  Intent intent;
  std::string_view name;
  bool user;
  bool agent;
};

constexpr std::array<IntentName, 18> kIntentTable = {{
    {Intent::kReveal, "Reveal", true, false},
    {Intent::kRemovePreference, "RemovePreference", true, false},
    {Intent::kInquire, "Inquire", true, false},
    {Intent::kAccept, "Accept", true, false},
    {Intent::kReject, "Reject", true, false},
    {Intent::kContinueRecommendation, "ContinueRecommendation", true, false},
    {Intent::kHi, "Hi", true, false},
    {Intent::kDeny, "Deny", true, false},
    {Intent::kUnrecognized, "Unrecognized", true, false},
    {Intent::kElicit, "Elicit", false, true},
    {Intent::kTooManyResults, "TooManyResults", false, true},
    {Intent::kRecommend, "Recommend", false, true},
    {Intent::kNoResults, "NoResults", false, true},
    {Intent::kInform, "Inform", false, true},
    {Intent::kWelcome, "Welcome", false, true},
    {Intent::kCantHelp, "CantHelp", false, true},
    {Intent::kAcknowledge, "Acknowledge", true, true},
    {Intent::kBye, "Bye", true, true},
}};

const IntentName& Lookup(Intent intent) {
  for (const auto& entry : kIntentTable) {
    if (entry.intent == intent) return entry;
  }
  return kIntentTable.back();
}

constexpr std::array<std::pair<FeedbackLabel, std::string_view>, 5>
    kFeedbackNames = {{
        {FeedbackLabel::kAccepted, "accepted"},
        {FeedbackLabel::kRejected, "rejected"},
        {FeedbackLabel::kDontLike, "dont_like"},
        {FeedbackLabel::kWatched, "watched"},
        {FeedbackLabel::kInquired, "inquired"},
    }};

Value NormalizeNumeric(SlotName slot, const Value& value) {
  const SlotInfo& info = GetSlotInfo(slot);
  if (info.integral) {
    if (const auto* d = std::get_if<double>(&value)) {
      if (std::floor(*d) != *d) {
        throw ValidationError("slot " + std::string(info.name) +
                              " takes whole numbers");
      }
      return static_cast<std::int64_t>(*d);
    }
    return value;
  }
  if (const auto* i = std::get_if<std::int64_t>(&value)) {
    return static_cast<double>(*i);
  }
  return value;
}

}  // namespace

std::string_view IntentToString(Intent intent) { return Lookup(intent).name; }

Intent ParseIntent(std::string_view name) {
  for (const auto& entry : kIntentTable) {
    if (entry.name == name) return entry.intent;
  }
  throw ValidationError("unknown intent '" + std::string(name) + "'");
}

std::string_view AuthorToString(Author author) {
  return author == Author::kUser ? "user" : "agent";
}

Author ParseAuthor(std::string_view name) {
  if (name == "user") return Author::kUser;
  if (name == "agent") return Author::kAgent;
  throw ValidationError("unknown author '" + std::string(name) + "'");
}

bool IsUserIntent(Intent intent) { return Lookup(intent).user; }
bool IsAgentIntent(Intent intent) { return Lookup(intent).agent; }

std::string_view FeedbackToString(FeedbackLabel label) {
  for (const auto& [l, name] : kFeedbackNames) {
    if (l == label) return name;
  }
  return "?";
}

FeedbackLabel ParseFeedback(std::string_view name) {
  for (const auto& [label, n] : kFeedbackNames) {
    if (n == name) return label;
  }
  throw ValidationError("unknown feedback label '" + std::string(name) + "'");
}

Constraint MakeConstraint(SlotName slot, Operator op, Value value) {
  const SlotInfo& info = GetSlotInfo(slot);
  if (IsOrderingOperator(op) && info.kind != ValueKind::kNumeric) {
    throw ValidationError("operator " + std::string(OperatorSymbol(op)) +
                          " is not valid on slot " + std::string(info.name));
  }
  if (IsDontCare(value) && op != Operator::kEq) {
    throw ValidationError("dont_care marker requires '='");
  }
  if (auto* s = std::get_if<std::string>(&value)) {
    if (info.kind == ValueKind::kNumeric) {
      throw ValidationError("slot " + std::string(info.name) +
                            " takes numeric values");
    }
    *s = Canonicalize(*s);
    if (s->empty()) value = std::monostate{};
  } else if (NumericValue(value)) {
    if (info.kind != ValueKind::kNumeric) {
      throw ValidationError("slot " + std::string(info.name) +
                            " takes text values");
    }
    value = NormalizeNumeric(slot, value);
  }
  return Constraint{slot, op, std::move(value)};
}

DialogueAct UserAct(Intent intent, std::vector<Constraint> constraints) {
  DialogueAct act;
  act.intent = intent;
  act.author = Author::kUser;
  act.constraints = std::move(constraints);
  return act;
}

DialogueAct AgentAct(Intent intent, std::vector<Constraint> constraints) {
  DialogueAct act;
  act.intent = intent;
  act.author = Author::kAgent;
  act.constraints = std::move(constraints);
  return act;
}

void ValidateAct(const DialogueAct& act) {
  const std::string name(IntentToString(act.intent));
  if (act.author == Author::kUser && !IsUserIntent(act.intent)) {
    throw ValidationError(name + " is not a user intent");
  }
  if (act.author == Author::kAgent && !IsAgentIntent(act.intent)) {
    throw ValidationError(name + " is not an agent intent");
  }
  for (const Constraint& c : act.constraints) {
    // Re-validate slot/op/value compatibility.
    Constraint normalized = MakeConstraint(c.slot, c.op, c.value);
    if (!(normalized == c)) {
      throw ValidationError(name + " carries a non-canonical constraint");
    }
  }
  switch (act.intent) {
    case Intent::kElicit:
      if (act.constraints.size() != 1 || !IsEmpty(act.constraints[0].value)) {
        throw ValidationError("Elicit takes exactly one empty slot");
      }
      break;
    case Intent::kInform:
      for (const Constraint& c : act.constraints) {
        if (IsEmpty(c.value) || IsDontCare(c.value)) {
          throw ValidationError("Inform constraints must carry values");
        }
      }
      break;
    case Intent::kRecommend:
      if (!act.item || act.item->empty()) {
        throw ValidationError("Recommend must reference one item");
      }
      break;
    case Intent::kInquire:
      for (const Constraint& c : act.constraints) {
        if (!IsEmpty(c.value)) {
          throw ValidationError("Inquire names slots without values");
        }
      }
      break;
    case Intent::kReveal:
    case Intent::kRemovePreference:
      if (act.constraints.empty()) {
        throw ValidationError(name + " needs at least one constraint");
      }
      for (const Constraint& c : act.constraints) {
        if (IsEmpty(c.value)) {
          throw ValidationError(name + " constraints must carry values");
        }
      }
      break;
    default:
      break;
  }
}

std::string ActToString(const DialogueAct& act) {
  std::string out(IntentToString(act.intent));
  out += "(";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  for (const Constraint& c : act.constraints) {
    sep();
    out += SlotToString(c.slot);
    if (!IsEmpty(c.value)) {
      out += OperatorSymbol(c.op);
      out += ValueToString(c.value);
    }
  }
  if (act.item) {
    sep();
    out += "item=" + *act.item;
  }
  if (act.count) {
    sep();
    out += "count=" + std::to_string(*act.count);
  }
  if (act.feedback) {
    sep();
    out += "feedback=" + std::string(FeedbackToString(*act.feedback));
  }
  out += ")";
  return out;
}

}  // namespace moviechat
