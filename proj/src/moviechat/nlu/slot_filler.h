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

#ifndef MOVIECHAT_NLU_SLOT_FILLER_H_
#define MOVIECHAT_NLU_SLOT_FILLER_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "moviechat/catalog/catalog.h"
#include "moviechat/core/information_need.h"
#include "moviechat/nlu/annotation.h"
#include "moviechat/nlu/pattern_registry.h"
#include "moviechat/nlu/year_parser.h"

namespace moviechat {

struct NluOptions {
  // Longest n-gram looked up in the lexicons.
  size_t max_ngram = 8;
  YearOptions years;
};

enum class PersonRole { kNone, kActor, kDirector };

// Finds slot values in an utterance by matching lemmatized n-grams (longest
// first) against lexicons built from the catalog, plus year expressions.
// Holds references to the catalog and registry, which must outlive it.
class SlotFiller {
 public:
  SlotFiller(const Catalog& catalog, const PatternRegistry& registry,
             NluOptions options = {});

  // Every lexicon and year match, before overlap resolution. Person names
  // are already assigned a role from nearby cues; names found in both person
  // lexicons without a cue come as a person_ambiguous pair.
  std::vector<Annotation> Candidates(const std::vector<Token>& tokens) const;

  // Candidates -> ResolveSpans -> polarity. `need` decides whether "don't
  // want X" removes an existing preference or states a negative one.
  std::vector<Annotation> Fill(const std::vector<Token>& tokens,
                               const InformationNeed* need = nullptr) const;
  std::vector<Annotation> Fill(std::string_view utterance,
                               const InformationNeed* need = nullptr) const;

  // Role cue governing tokens [begin, end) within their clause.
  PersonRole RoleFor(const std::vector<Token>& tokens, size_t begin,
                     size_t end) const;

  const PatternRegistry& registry() const { return registry_; }
  const NluOptions& options() const { return options_; }

 private:
  struct Entry {
    SlotName slot;
    std::string value;
    AnnotationSource source;
    // Punctuation level before each inner token of the entry text; an
    // utterance n-gram may not break harder than this ("Samuel L. Jackson"
    // matches, "movie, starring" does not match "movie star").
    std::vector<int> breaks;
    // Lowercased surface words, to tell apart values sharing a lemma key
    // ("alien", "aliens").
    std::string surface;
    // Lemmas past the n-gram window for entries longer than max_ngram; such
    // entries are indexed by their leading window and matched by extension.
    std::vector<std::string> tail;
  };

  void AddEntry(const std::string& text, SlotName slot,
                const std::string& value, AnnotationSource source);
  // Token range of the coordinator-delimited chunk holding token `at`.
  std::pair<size_t, size_t> Chunk(const std::vector<Token>& tokens,
                                  size_t at) const;
  std::pair<size_t, size_t> Clause(const std::vector<Token>& tokens,
                                   size_t at) const;
  void ApplyPolarity(const std::vector<Token>& tokens,
                     std::vector<Annotation>& annotations,
                     const InformationNeed* need) const;

  const PatternRegistry& registry_;
  NluOptions options_;
  std::unordered_map<std::string, std::vector<Entry>> index_;
};

}  // namespace moviechat

#endif  // MOVIECHAT_NLU_SLOT_FILLER_H_
