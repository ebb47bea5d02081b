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

#include "moviechat/core/information_need.h"

#include <algorithm>

#include "moviechat/core/errors.h"

namespace moviechat {

std::vector<Constraint> InformationNeed::ConstraintsFor(SlotName slot) const {
  std::vector<Constraint> out;
  for (const Constraint& c : constraints_) {
    if (c.slot == slot) out.push_back(c);
  }
  return out;
}

bool InformationNeed::HasConstraints(SlotName slot) const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [slot](const Constraint& c) { return c.slot == slot; });
}

std::vector<SlotName> InformationNeed::ConstrainedSlots() const {
  std::vector<SlotName> slots;
  for (const Constraint& c : constraints_) {
    if (std::find(slots.begin(), slots.end(), c.slot) == slots.end()) {
      slots.push_back(c.slot);
    }
  }
  return slots;
}

bool InformationNeed::Add(const Constraint& constraint) {
  if (moviechat::IsDontCare(constraint.value)) {
    MarkDontCare(constraint.slot);
    return true;
  }
  dont_care_.erase(constraint.slot);
  if (std::find(constraints_.begin(), constraints_.end(), constraint) !=
      constraints_.end()) {
    return false;
  }
  constraints_.push_back(constraint);
  return true;
}

int InformationNeed::Remove(SlotName slot, const Value& value) {
  if (moviechat::IsDontCare(value)) return ClearDontCare(slot) ? 1 : 0;
  const auto before = constraints_.size();
  std::erase_if(constraints_, [&](const Constraint& c) {
    return c.slot == slot && c.value == value;
  });
  return static_cast<int>(before - constraints_.size());
}

void InformationNeed::MarkDontCare(SlotName slot) {
  std::erase_if(constraints_,
                [slot](const Constraint& c) { return c.slot == slot; });
  dont_care_.insert(slot);
}

InformationNeed ApplyUserAct(const InformationNeed& need,
                             const DialogueAct& act,
                             std::vector<std::string>* notes) {
  if (act.author != Author::kUser) {
    throw ValidationError("information need only takes user acts");
  }
  if (act.intent != Intent::kReveal &&
      act.intent != Intent::kRemovePreference) {
    throw ValidationError("cannot apply " +
                          std::string(IntentToString(act.intent)) +
                          " to the information need");
  }
  InformationNeed out = need;
  for (const Constraint& raw : act.constraints) {
    const Constraint c = MakeConstraint(raw.slot, raw.op, raw.value);
    if (IsEmpty(c.value)) {
      throw ValidationError("preference on " +
                            std::string(SlotToString(c.slot)) +
                            " has no value");
    }
    if (act.intent == Intent::kReveal) {
      out.Add(c);
    } else if (out.Remove(c.slot, c.value) == 0 && notes != nullptr) {
      notes->push_back("remove: no preference " +
                       std::string(SlotToString(c.slot)) + "=" +
                       ValueToString(c.value) + " to drop");
    }
  }
  return out;
}

int PreferenceCount(const InformationNeed& need) {
  return static_cast<int>(need.ConstrainedSlots().size());
}

}  // namespace moviechat
