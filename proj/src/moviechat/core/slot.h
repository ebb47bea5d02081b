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

#ifndef MOVIECHAT_CORE_SLOT_H_
#define MOVIECHAT_CORE_SLOT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace moviechat {

// Item attributes over which preferences can be stated. The set is closed.
enum class SlotName {
  kGenres,
  kKeywords,
  kActors,
  kDirectors,
  kTitle,
  kReleaseYear,
  kDuration,
  kRating,
  kPlot,
};

enum class ValueKind {
  kCategoricalMulti,
  kPersonMulti,
  kFreeText,
  kNumeric,
};

struct SlotInfo {
  SlotName slot;
  std::string_view name;
  ValueKind kind;
  bool multi_valued;
  // Numeric slots only: values are whole numbers (years, minutes).
  bool integral;
  // Slot has a value lexicon built from the catalog.
  bool has_lexicon;
};

inline constexpr std::array<SlotName, 9> kAllSlots = {
    SlotName::kGenres,      SlotName::kKeywords, SlotName::kActors,
    SlotName::kDirectors,   SlotName::kTitle,    SlotName::kReleaseYear,
    SlotName::kDuration,    SlotName::kRating,   SlotName::kPlot,
};

const SlotInfo& GetSlotInfo(SlotName slot);
std::string_view SlotToString(SlotName slot);
std::optional<SlotName> LookupSlot(std::string_view name);
// Throws ValidationError for names outside the closed set.
SlotName ParseSlot(std::string_view name);

inline bool IsNumeric(SlotName slot) {
  return GetSlotInfo(slot).kind == ValueKind::kNumeric;
}
inline bool HasLexicon(SlotName slot) { return GetSlotInfo(slot).has_lexicon; }
inline bool IsPersonSlot(SlotName slot) {
  return GetSlotInfo(slot).kind == ValueKind::kPersonMulti;
}

enum class Operator { kEq, kNeq, kLt, kGt, kLeq, kGeq };

inline constexpr std::array<Operator, 6> kAllOperators = {
    Operator::kEq, Operator::kNeq, Operator::kLt,
    Operator::kGt, Operator::kLeq, Operator::kGeq,
};

std::string_view OperatorSymbol(Operator op);
Operator ParseOperator(std::string_view symbol);
// LT/GT/LEQ/GEQ only make sense on ordered (numeric) slots.
inline bool IsOrderingOperator(Operator op) {
  return op != Operator::kEq && op != Operator::kNeq;
}

// Marker value: the user does not care about a slot.
struct DontCare {
  bool operator==(const DontCare&) const = default;
};

// Empty (monostate) values are used by Elicit and Inquire acts to name a slot
// without filling it.
using Value = std::variant<std::monostate, std::string, std::int64_t, double,
                           DontCare>;

inline bool IsEmpty(const Value& v) {
  return std::holds_alternative<std::monostate>(v);
}
inline bool IsDontCare(const Value& v) {
  return std::holds_alternative<DontCare>(v);
}
std::optional<double> NumericValue(const Value& v);
std::string ValueToString(const Value& v);

// Case-folds ASCII letters, trims, and collapses runs of whitespace.
std::string Canonicalize(std::string_view text);

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_SLOT_H_
