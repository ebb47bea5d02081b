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

#ifndef MOVIECHAT_CATALOG_CATALOG_H_
#define MOVIECHAT_CATALOG_CATALOG_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "moviechat/core/information_need.h"
#include "moviechat/core/serialization.h"

namespace moviechat {

// One movie record. List and text fields keep their display spelling;
// matching always goes through Canonicalize().
struct Item {
  std::string id;
  std::string title;
  std::vector<std::string> genres;
  std::vector<std::string> keywords;
  std::vector<std::string> actors;
  std::vector<std::string> directors;
  int release_year = 0;
  int duration = 0;  // minutes
  double rating = 0.0;
  std::int64_t votes = 0;
  std::string plot;
  std::string item_url;
  std::string cover_url;
};

// Canonical genre -> alternative spellings users may type ("sci-fi").
using SynonymTable = std::map<std::string, std::set<std::string>>;

SynonymTable LoadSynonyms(std::istream& in);
SynonymTable LoadSynonymsFile(const std::filesystem::path& path);

struct LoadDiagnostic {
  int line = 0;
  std::string message;
};

struct LoadReport {
  int records = 0;    // non-blank lines seen
  int kept = 0;
  int dropped = 0;    // well-formed records missing an essential attribute
  int malformed = 0;  // unparseable or out-of-range records
  std::vector<LoadDiagnostic> diagnostics;
};

Json ReportToJson(const LoadReport& report);

struct FilterOptions {
  // When set, several '=' values on one multi-valued slot match any of them
  // instead of all of them.
  bool disjunctive_eq = false;
};

// Immutable item collection with per-slot lexicons and constraint filtering.
//
// Items are held in canonical ranking order: rating descending, then votes
// descending, then id ascending.
class Catalog {
 public:
  // Reads one JSON record per line. Records missing title, genres,
  // release_year or rating are dropped; malformed records are skipped with a
  // line-numbered diagnostic. Throws ValidationError if nothing survives.
  static Catalog Load(std::istream& in, const SynonymTable& synonyms = {},
                      LoadReport* report = nullptr);
  // Throws IoError if the file cannot be opened.
  static Catalog LoadFile(const std::filesystem::path& path,
                          const SynonymTable& synonyms = {},
                          LoadReport* report = nullptr);
  // Builds a catalog from already-validated items (tests, converters).
  static Catalog FromItems(std::vector<Item> items,
                           const SynonymTable& synonyms = {});

  const std::vector<Item>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  const Item* Find(std::string_view id) const;
  // Throws NotFoundError.
  const Item& Get(std::string_view id) const;
  // Position in the canonical ranking; smaller is better.
  size_t RankOf(std::string_view id) const;

  bool Matches(const Item& item, const InformationNeed& need,
               const FilterOptions& options = {}) const;
  std::vector<std::string> Filter(const InformationNeed& need,
                                  const FilterOptions& options = {}) const;
  std::int64_t Count(const InformationNeed& need,
                     const FilterOptions& options = {}) const;

  // Canonical values of a lexicon-bearing slot (genres, keywords, actors,
  // directors, title). Throws ValidationError for other slots.
  const std::set<std::string>& Lexicon(SlotName slot) const;
  const SynonymTable& genre_synonyms() const { return synonyms_; }

  // Display spelling of a canonical value ("meryl streep" -> "Meryl Streep").
  // Falls back to the canonical value when unknown.
  std::string DisplayForm(SlotName slot, const std::string& canonical) const;

 private:
  Catalog() = default;
  void Index(const SynonymTable& synonyms);

  std::vector<Item> items_;
  std::unordered_map<std::string, size_t> by_id_;
  std::map<SlotName, std::set<std::string>> lexicons_;
  std::map<SlotName, std::map<std::string, std::string>> display_;
  SynonymTable synonyms_;
  // Canonical forms per item, parallel to items_.
  struct Canon {
    std::set<std::string> genres, keywords, actors, directors;
    std::string title, plot;
  };
  std::vector<Canon> canon_;
};

// Canonical ranking comparison: true if a ranks before b.
bool RanksBefore(const Item& a, const Item& b);

}  // namespace moviechat

#endif  // MOVIECHAT_CATALOG_CATALOG_H_
