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

#ifndef MOVIECHAT_CORE_INFORMATION_NEED_H_
#define MOVIECHAT_CORE_INFORMATION_NEED_H_

#include <set>
#include <string>
#include <vector>

#include "moviechat/core/dialogue_act.h"

namespace moviechat {

// The user's accumulated preference constraints within one conversation.
//
// Constraints are kept in arrival order so the recap reads the way the user
// said things. A slot never holds the same (op, value) twice, and a slot
// marked don't-care holds no constraints.
class InformationNeed {
 public:
  InformationNeed() = default;

  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::set<SlotName>& dont_care() const { return dont_care_; }

  std::vector<Constraint> ConstraintsFor(SlotName slot) const;
  bool HasConstraints(SlotName slot) const;
  bool IsDontCare(SlotName slot) const { return dont_care_.count(slot) > 0; }
  bool empty() const { return constraints_.empty() && dont_care_.empty(); }

  // Constrained slots in order of first arrival.
  std::vector<SlotName> ConstrainedSlots() const;

  // Returns false if the constraint was already present. Adding to a
  // don't-care slot takes the slot out of the don't-care set.
  bool Add(const Constraint& constraint);
  // Removes constraints matching slot and value under any operator. Returns
  // the number removed.
  int Remove(SlotName slot, const Value& value);
  void MarkDontCare(SlotName slot);
  bool ClearDontCare(SlotName slot) { return dont_care_.erase(slot) > 0; }

  bool operator==(const InformationNeed&) const = default;

 private:
  std::vector<Constraint> constraints_;
  std::set<SlotName> dont_care_;
};

// Applies a user Reveal or RemovePreference act and returns the updated need.
// Removal of an absent value is a no-op; a note is appended to `notes` when
// given. Throws ValidationError for other intents or invalid constraints.
InformationNeed ApplyUserAct(const InformationNeed& need,
                             const DialogueAct& act,
                             std::vector<std::string>* notes = nullptr);

// Number of slots holding at least one constraint.
int PreferenceCount(const InformationNeed& need);

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_INFORMATION_NEED_H_
