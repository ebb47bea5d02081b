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

#include "moviechat/catalog/catalog.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

constexpr int kMinYear = 1870;
constexpr int kMaxYear = 2100;

// Thrown while parsing one record; turned into a diagnostic by Load().
struct RecordError {
  std::string message;
  bool missing_essential;
};

bool Present(const Json& record, const char* name) {
  if (!record.contains(name)) return false;
  const Json& v = record.at(name);
  if (v.is_null()) return false;
  if (v.is_string()) return !Canonicalize(v.get<std::string>()).empty();
  if (v.is_array()) return !v.empty();
  return true;
}

std::string TextField(const Json& record, const char* name) {
  if (!record.contains(name) || record.at(name).is_null()) return "";
  const Json& v = record.at(name);
  if (!v.is_string()) {
    throw RecordError{std::string(name) + " must be a string", false};
  }
  return v.get<std::string>();
}

std::vector<std::string> ListField(const Json& record, const char* name) {
  std::vector<std::string> out;
  if (!record.contains(name) || record.at(name).is_null()) return out;
  const Json& v = record.at(name);
  if (!v.is_array()) {
    throw RecordError{std::string(name) + " must be a list", false};
  }
  std::set<std::string> seen;
  for (const Json& e : v) {
    if (!e.is_string()) {
      throw RecordError{std::string(name) + " entries must be strings", false};
    }
    std::string value = e.get<std::string>();
    const std::string canonical = Canonicalize(value);
    if (canonical.empty() || !seen.insert(canonical).second) continue;
    out.push_back(std::move(value));
  }
  return out;
}

std::int64_t IntegerField(const Json& record, const char* name) {
  const Json& v = record.at(name);
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<std::int64_t>(d))) {
      return static_cast<std::int64_t>(d);
    }
  }
  throw RecordError{std::string(name) + " must be an integer", false};
}

Item ParseRecord(const Json& record) {
  if (!record.is_object()) throw RecordError{"record is not an object", false};
  Item item;
  item.id = TextField(record, "id");
  if (Canonicalize(item.id).empty()) throw RecordError{"missing id", false};
  for (const char* essential : {"title", "genres", "release_year", "rating"}) {
    if (!Present(record, essential)) {
      throw RecordError{std::string("missing essential attribute ") + essential,
                        true};
    }
  }
  item.title = TextField(record, "title");
  item.genres = ListField(record, "genres");
  item.keywords = ListField(record, "keywords");
  item.actors = ListField(record, "actors");
  item.directors = ListField(record, "directors");
  const std::int64_t year = IntegerField(record, "release_year");
  if (year < kMinYear || year > kMaxYear) {
    throw RecordError{"release_year " + std::to_string(year) + " out of range",
                      false};
  }
  item.release_year = static_cast<int>(year);
  if (!record.at("rating").is_number()) {
    throw RecordError{"rating must be a number", false};
  }
  item.rating = record.at("rating").get<double>();
  if (item.rating < 0.0 || item.rating > 10.0) {
    throw RecordError{"rating out of range [0, 10]", false};
  }
  if (Present(record, "duration")) {
    const std::int64_t minutes = IntegerField(record, "duration");
    if (minutes < 0) throw RecordError{"duration must be >= 0", false};
    item.duration = static_cast<int>(minutes);
  }
  if (Present(record, "votes")) {
    item.votes = IntegerField(record, "votes");
    if (item.votes < 0) throw RecordError{"votes must be >= 0", false};
  }
  item.plot = TextField(record, "plot");
  item.item_url = TextField(record, "item_url");
  item.cover_url = TextField(record, "cover_url");
  return item;
}

std::set<std::string> CanonicalSet(const std::vector<std::string>& values) {
  std::set<std::string> out;
  for (const auto& v : values) out.insert(Canonicalize(v));
  return out;
}

bool Compare(double lhs, Operator op, double rhs) {
  switch (op) {
    case Operator::kEq:
      return lhs == rhs;
    case Operator::kNeq:
      return lhs != rhs;
    case Operator::kLt:
      return lhs < rhs;
    case Operator::kGt:
      return lhs > rhs;
    case Operator::kLeq:
      return lhs <= rhs;
    case Operator::kGeq:
      return lhs >= rhs;
  }
  return false;
}

}  // namespace

bool RanksBefore(const Item& a, const Item& b) {
  if (a.rating != b.rating) return a.rating > b.rating;
  if (a.votes != b.votes) return a.votes > b.votes;
  return a.id < b.id;
}

SynonymTable LoadSynonyms(std::istream& in) {
  Json json;
  try {
    json = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("synonym table: ") + e.what());
  }
  if (!json.is_object()) throw ConfigError("synonym table must be an object");
  SynonymTable table;
  for (const auto& [genre, list] : json.items()) {
    auto& synonyms = table[Canonicalize(genre)];
    if (!list.is_array()) {
      throw ConfigError("synonyms of '" + genre + "' must be a list");
    }
    for (const Json& s : list) synonyms.insert(Canonicalize(s.get<std::string>()));
  }
  return table;
}

SynonymTable LoadSynonymsFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open synonym table " + path.string());
  return LoadSynonyms(in);
}

Json ReportToJson(const LoadReport& report) {
  Json out;
  out["records"] = report.records;
  out["kept"] = report.kept;
  out["dropped"] = report.dropped;
  out["malformed"] = report.malformed;
  out["diagnostics"] = Json::array();
  for (const auto& d : report.diagnostics) {
    out["diagnostics"].push_back(Json{{"line", d.line}, {"message", d.message}});
  }
  return out;
}

Catalog Catalog::Load(std::istream& in, const SynonymTable& synonyms,
                      LoadReport* report) {
  LoadReport local;
  LoadReport& r = report ? *report : local;
  r = LoadReport{};
  std::vector<Item> items;
  std::set<std::string> ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Canonicalize(line).empty()) continue;
    ++r.records;
    try {
      Json record;
      try {
        record = Json::parse(line);
      } catch (const Json::parse_error&) {
        throw RecordError{"not a JSON record", false};
      }
      Item item = ParseRecord(record);
      if (!ids.insert(item.id).second) {
        throw RecordError{"duplicate id " + item.id, false};
      }
      items.push_back(std::move(item));
    } catch (const RecordError& e) {
      (e.missing_essential ? r.dropped : r.malformed)++;
      r.diagnostics.push_back({line_no, e.message});
    } catch (const Json::exception& e) {
      ++r.malformed;
      r.diagnostics.push_back({line_no, e.what()});
    }
  }
  if (in.bad()) throw IoError("error while reading catalog");
  r.kept = static_cast<int>(items.size());
  if (items.empty()) {
    throw ValidationError("catalog has no valid items (" +
                          std::to_string(r.records) + " records read)");
  }
  Catalog catalog;
  catalog.items_ = std::move(items);
  catalog.Index(synonyms);
  return catalog;
}

Catalog Catalog::LoadFile(const std::filesystem::path& path,
                          const SynonymTable& synonyms, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open catalog " + path.string());
  return Load(in, synonyms, report);
}

Catalog Catalog::FromItems(std::vector<Item> items,
                           const SynonymTable& synonyms) {
  if (items.empty()) throw ValidationError("catalog has no items");
  std::set<std::string> ids;
  for (const Item& item : items) {
    if (item.id.empty() || !ids.insert(item.id).second) {
      throw ValidationError("item ids must be non-empty and unique");
    }
    if (item.genres.empty()) {
      throw ValidationError("item " + item.id + " has no genres");
    }
  }
  Catalog catalog;
  catalog.items_ = std::move(items);
  catalog.Index(synonyms);
  return catalog;
}

void Catalog::Index(const SynonymTable& synonyms) {
  std::sort(items_.begin(), items_.end(), RanksBefore);
  by_id_.clear();
  canon_.clear();
  lexicons_.clear();
  display_.clear();
  for (SlotName slot : kAllSlots) {
    if (HasLexicon(slot)) lexicons_[slot];
  }
  auto add = [this](SlotName slot, const std::string& display) {
    const std::string canonical = Canonicalize(display);
    lexicons_[slot].insert(canonical);
    display_[slot].emplace(canonical, display);
  };
  for (size_t i = 0; i < items_.size(); ++i) {
    const Item& item = items_[i];
    by_id_.emplace(item.id, i);
    for (const auto& g : item.genres) add(SlotName::kGenres, g);
    for (const auto& k : item.keywords) add(SlotName::kKeywords, k);
    for (const auto& a : item.actors) add(SlotName::kActors, a);
    for (const auto& d : item.directors) add(SlotName::kDirectors, d);
    if (!Canonicalize(item.title).empty()) add(SlotName::kTitle, item.title);
    canon_.push_back(Canon{CanonicalSet(item.genres),
                           CanonicalSet(item.keywords),
                           CanonicalSet(item.actors),
                           CanonicalSet(item.directors),
                           Canonicalize(item.title), Canonicalize(item.plot)});
  }
  // Synonyms only for genres that exist in this collection.
  synonyms_.clear();
  const auto& genres = lexicons_[SlotName::kGenres];
  for (const auto& [genre, alternatives] : synonyms) {
    if (genres.count(genre)) synonyms_[genre] = alternatives;
  }
}

const Item* Catalog::Find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &items_[it->second];
}

const Item& Catalog::Get(std::string_view id) const {
  if (const Item* item = Find(id)) return *item;
  throw NotFoundError("no item with id '" + std::string(id) + "'");
}

size_t Catalog::RankOf(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) {
    throw NotFoundError("no item with id '" + std::string(id) + "'");
  }
  return it->second;
}

bool Catalog::Matches(const Item& item, const InformationNeed& need,
                      const FilterOptions& options) const {
  const Canon& canon = canon_[RankOf(item.id)];
  // For disjunctive mode: slot -> whether some '=' value matched / was seen.
  std::map<SlotName, std::pair<bool, bool>> any_of;
  for (const Constraint& c : need.constraints()) {
    const std::set<std::string>* set = nullptr;
    switch (c.slot) {
      case SlotName::kGenres:
        set = &canon.genres;
        break;
      case SlotName::kKeywords:
        set = &canon.keywords;
        break;
      case SlotName::kActors:
        set = &canon.actors;
        break;
      case SlotName::kDirectors:
        set = &canon.directors;
        break;
      default:
        break;
    }
    if (set != nullptr) {
      const auto* value = std::get_if<std::string>(&c.value);
      if (value == nullptr) continue;
      const bool contains = set->count(*value) > 0;
      if (c.op == Operator::kNeq) {
        if (contains) return false;
      } else if (options.disjunctive_eq) {
        auto& [seen, hit] = any_of[c.slot];
        seen = true;
        hit = hit || contains;
      } else if (!contains) {
        return false;
      }
      continue;
    }
    if (c.slot == SlotName::kTitle || c.slot == SlotName::kPlot) {
      const auto* value = std::get_if<std::string>(&c.value);
      if (value == nullptr) continue;
      const bool hit = c.slot == SlotName::kTitle
                           ? canon.title == *value
                           : canon.plot.find(*value) != std::string::npos;
      if (hit == (c.op == Operator::kNeq)) return false;
      continue;
    }
    const auto bound = NumericValue(c.value);
    if (!bound) continue;
    double actual = 0.0;
    if (c.slot == SlotName::kReleaseYear) actual = item.release_year;
    if (c.slot == SlotName::kDuration) actual = item.duration;
    if (c.slot == SlotName::kRating) actual = item.rating;
    if (!Compare(actual, c.op, *bound)) return false;
  }
  for (const auto& [slot, seen_hit] : any_of) {
    if (seen_hit.first && !seen_hit.second) return false;
  }
  return true;
}

std::vector<std::string> Catalog::Filter(const InformationNeed& need,
                                         const FilterOptions& options) const {
  std::vector<std::string> ids;
  for (const Item& item : items_) {
    if (Matches(item, need, options)) ids.push_back(item.id);
  }
  return ids;
}

std::int64_t Catalog::Count(const InformationNeed& need,
                            const FilterOptions& options) const {
  return std::count_if(items_.begin(), items_.end(), [&](const Item& item) {
    return Matches(item, need, options);
  });
}

const std::set<std::string>& Catalog::Lexicon(SlotName slot) const {
  auto it = lexicons_.find(slot);
  if (!HasLexicon(slot) || it == lexicons_.end()) {
    throw ValidationError("slot " + std::string(SlotToString(slot)) +
                          " has no lexicon");
  }
  return it->second;
}

std::string Catalog::DisplayForm(SlotName slot,
                                 const std::string& canonical) const {
  auto slot_it = display_.find(slot);
  if (slot_it != display_.end()) {
    auto it = slot_it->second.find(canonical);
    if (it != slot_it->second.end()) return it->second;
  }
  return canonical;
}

}  // namespace moviechat
