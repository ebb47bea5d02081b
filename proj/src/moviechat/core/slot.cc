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

#include "moviechat/core/slot.h"

#include <cctype>
#include <cmath>
#include <sstream>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

constexpr std::array<SlotInfo, 9> kSlotTable = {{
    {SlotName::kGenres, "genres", ValueKind::kCategoricalMulti, true, false,
     true},
    {SlotName::kKeywords, "keywords", ValueKind::kCategoricalMulti, true,
     false, true},
    {SlotName::kActors, "actors", ValueKind::kPersonMulti, true, false, true},
    {SlotName::kDirectors, "directors", ValueKind::kPersonMulti, true, false,
     true},
    {SlotName::kTitle, "title", ValueKind::kFreeText, false, false, true},
    {SlotName::kReleaseYear, "release_year", ValueKind::kNumeric, false, true,
     false},
    {SlotName::kDuration, "duration", ValueKind::kNumeric, false, true, false},
    {SlotName::kRating, "rating", ValueKind::kNumeric, false, false, false},
    {SlotName::kPlot, "plot", ValueKind::kFreeText, false, false, false},
}};

}  // namespace

const SlotInfo& GetSlotInfo(SlotName slot) {
  return kSlotTable[static_cast<size_t>(slot)];
}

std::string_view SlotToString(SlotName slot) { return GetSlotInfo(slot).name; }

std::optional<SlotName> LookupSlot(std::string_view name) {
  for (const SlotInfo& info : kSlotTable) {
    if (info.name == name) return info.slot;
  }
  return std::nullopt;
}

SlotName ParseSlot(std::string_view name) {
  if (auto slot = LookupSlot(name)) return *slot;
  throw ValidationError("unknown slot '" + std::string(name) + "'");
}

std::string_view OperatorSymbol(Operator op) {
  switch (op) {
    case Operator::kEq:
      return "=";
    case Operator::kNeq:
      return "!=";
    case Operator::kLt:
      return "<";
    case Operator::kGt:
      return ">";
    case Operator::kLeq:
      return "<=";
    case Operator::kGeq:
      return ">=";
  }
  return "?";
}

Operator ParseOperator(std::string_view symbol) {
  for (Operator op : kAllOperators) {
    if (OperatorSymbol(op) == symbol) return op;
  }
  throw ValidationError("unknown operator '" + std::string(symbol) + "'");
}

std::optional<double> NumericValue(const Value& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return static_cast<double>(*i);
  }
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::nullopt;
}

std::string ValueToString(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      std::ostringstream out;
      out << d;
      return out.str();
    }
    std::string operator()(DontCare) const { return "dont_care"; }
  };
  return std::visit(Visitor{}, v);
}

std::string Canonicalize(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

}  // namespace moviechat
