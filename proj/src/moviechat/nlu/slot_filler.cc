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

#include "moviechat/nlu/slot_filler.h"

#include <algorithm>

namespace moviechat {
namespace {

constexpr SlotName kLexiconSlots[] = {SlotName::kGenres, SlotName::kKeywords,
                                      SlotName::kActors, SlotName::kDirectors,
                                      SlotName::kTitle};

bool ContainsValue(const InformationNeed& need, SlotName slot,
                   const Value& value) {
  for (const Constraint& c : need.constraints()) {
    if (c.slot == slot && c.value == value) return true;
  }
  return false;
}

std::string SurfaceKey(const std::vector<Token>& tokens, size_t begin,
                       size_t end) {
  std::string out;
  for (size_t k = begin; k < end; ++k) {
    if (k > begin) out += ' ';
    out += Canonicalize(tokens[k].surface);
  }
  return out;
}

}  // namespace

SlotFiller::SlotFiller(const Catalog& catalog, const PatternRegistry& registry,
                       NluOptions options)
    : registry_(registry), options_(options) {
  for (SlotName slot : kLexiconSlots) {
    for (const std::string& value : catalog.Lexicon(slot)) {
      AddEntry(value, slot, value, AnnotationSource::kLexicon);
    }
  }
  for (const auto& [genre, synonyms] : catalog.genre_synonyms()) {
    for (const std::string& synonym : synonyms) {
      AddEntry(synonym, SlotName::kGenres, genre, AnnotationSource::kSynonym);
    }
  }
}

void SlotFiller::AddEntry(const std::string& text, SlotName slot,
                          const std::string& value, AnnotationSource source) {
  const std::vector<Token> tokens = registry_.lemmatizer().Tokenize(text);
  if (tokens.empty()) return;
  const size_t head = std::min(tokens.size(), options_.max_ngram);
  auto& entries = index_[JoinLemmas(tokens, 0, head)];
  for (const Entry& e : entries) {
    if (e.slot == slot && e.value == value) return;
  }
  Entry entry{slot, value, source, {}, SurfaceKey(tokens, 0, tokens.size()), {}};
  for (size_t k = 1; k < tokens.size(); ++k) {
    entry.breaks.push_back(tokens[k].break_before);
  }
  for (size_t k = head; k < tokens.size(); ++k) {
    entry.tail.push_back(tokens[k].lemma);
  }
  entries.push_back(std::move(entry));
}

std::pair<size_t, size_t> SlotFiller::Chunk(const std::vector<Token>& tokens,
                                            size_t at) const {
  auto is_coordinator = [&](size_t k) {
    return PhraseAt(tokens, k, registry_.coordinators());
  };
  size_t begin = at;
  while (begin > 0 && tokens[begin].break_before == 0 &&
         !is_coordinator(begin - 1)) {
    --begin;
  }
  size_t end = at + 1;
  while (end < tokens.size() && tokens[end].break_before == 0 &&
         !is_coordinator(end)) {
    ++end;
  }
  return {begin, end};
}

std::pair<size_t, size_t> SlotFiller::Clause(const std::vector<Token>& tokens,
                                             size_t at) const {
  auto is_break = [&](size_t k) {
    return PhraseAt(tokens, k, registry_.clause_breaks());
  };
  size_t begin = at;
  while (begin > 0 && tokens[begin].break_before < 2 && !is_break(begin - 1)) {
    --begin;
  }
  size_t end = at + 1;
  while (end < tokens.size() && tokens[end].break_before < 2 && !is_break(end)) {
    ++end;
  }
  return {begin, end};
}

PersonRole SlotFiller::RoleFor(const std::vector<Token>& tokens, size_t begin,
                               size_t end) const {
  const auto [cb, ce] = Chunk(tokens, begin);
  auto role_at = [&](size_t k, size_t limit) {
    size_t len = 0;
    if (PhraseAt(tokens, k, registry_.director_cues(), &len) &&
        k + len <= limit) {
      return PersonRole::kDirector;
    }
    if (PhraseAt(tokens, k, registry_.actor_cues(), &len) && k + len <= limit) {
      return PersonRole::kActor;
    }
    return PersonRole::kNone;
  };
  for (size_t k = begin; k-- > cb;) {
    const PersonRole role = role_at(k, begin);
    if (role != PersonRole::kNone) return role;
  }
  for (size_t k = end; k < std::max(ce, end); ++k) {
    const PersonRole role = role_at(k, tokens.size());
    if (role != PersonRole::kNone) return role;
  }
  return PersonRole::kNone;
}

std::vector<Annotation> SlotFiller::Candidates(
    const std::vector<Token>& tokens) const {
  std::vector<Annotation> out;
  int group = 0;
  auto base = [&](size_t i, size_t n) {
    Annotation a;
    a.token_begin = i;
    a.token_end = i + n;
    a.start = tokens[i].start;
    a.end = tokens[i + n - 1].end;
    return a;
  };
  const size_t max_n = std::min(options_.max_ngram, tokens.size());
  for (size_t n = max_n; n >= 1; --n) {
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
      auto it = index_.find(JoinLemmas(tokens, i, i + n));
      if (it == index_.end()) continue;
      std::vector<const Entry*> fitting;
      for (const Entry& e : it->second) {
        const size_t len = n + e.tail.size();
        if (i + len > tokens.size()) continue;
        bool fits = true;
        for (size_t k = 1; k < len && fits; ++k) {
          fits = tokens[i + k].break_before <= e.breaks[k - 1];
        }
        for (size_t k = 0; k < e.tail.size() && fits; ++k) {
          fits = tokens[i + n + k].lemma == e.tail[k];
        }
        if (!fits) continue;
        if (e.tail.empty()) {
          fitting.push_back(&e);
          continue;
        }
        // Long entries (titles) carry enough content to stand alone.
        Annotation a = base(i, len);
        a.slot = e.slot;
        a.value = e.value;
        a.source = e.source;
        out.push_back(std::move(a));
      }
      if (fitting.empty()) continue;
      // Several values of one slot under the same lemmas: keep the one
      // spelled exactly as typed, else the first.
      const std::string typed = SurfaceKey(tokens, i, i + n);
      std::vector<const Entry*> entries;
      for (const Entry* e : fitting) {
        const Entry* chosen = nullptr;
        for (const Entry* f : fitting) {
          if (f->slot != e->slot) continue;
          if (chosen == nullptr || (f->surface == typed &&
                                    chosen->surface != typed)) {
            chosen = f;
          }
        }
        if (chosen == e) entries.push_back(e);
      }
      size_t content = 0;
      for (size_t k = i; k < i + n; ++k) {
        if (!registry_.IsStopword(tokens[k].lemma)) ++content;
      }
      bool cued = false;
      for (const Phrase& cue : registry_.title_cues()) {
        size_t len = 0;
        if (cue.size() <= i && PhraseAt(tokens, i - cue.size(), {cue}, &len)) {
          cued = true;
        }
      }
      // People found under this key: value -> (actor, director).
      std::vector<std::pair<std::string, std::pair<bool, bool>>> people;
      for (const Entry* entry : entries) {
        const Entry& e = *entry;
        if (e.slot == SlotName::kActors || e.slot == SlotName::kDirectors) {
          if (content == 0) continue;
          auto p = std::find_if(people.begin(), people.end(),
                                [&](const auto& x) { return x.first == e.value; });
          if (p == people.end()) {
            people.push_back({e.value, {false, false}});
            p = people.end() - 1;
          }
          (e.slot == SlotName::kActors ? p->second.first : p->second.second) =
              true;
          continue;
        }
        if (e.slot == SlotName::kTitle) {
          if (!cued && content < 2) continue;
        } else if (content == 0) {
          continue;
        }
        Annotation a = base(i, n);
        a.slot = e.slot;
        a.value = e.value;
        a.source = e.source;
        a.title_cued = e.slot == SlotName::kTitle && cued;
        out.push_back(std::move(a));
      }
      for (const auto& [value, roles] : people) {
        const PersonRole role = RoleFor(tokens, i, i + n);
        Annotation a = base(i, n);
        a.value = value;
        if (role == PersonRole::kDirector ||
            (role == PersonRole::kNone && !roles.first)) {
          a.slot = SlotName::kDirectors;
          out.push_back(a);
        } else if (role == PersonRole::kActor || !roles.second) {
          a.slot = SlotName::kActors;
          out.push_back(a);
        } else {
          a.source = AnnotationSource::kPersonAmbiguous;
          a.group = group++;
          a.slot = SlotName::kActors;
          out.push_back(a);
          a.slot = SlotName::kDirectors;
          out.push_back(a);
        }
      }
    }
  }
  for (Annotation& a :
       ParseYearExpressions(tokens, registry_, options_.years, group)) {
    out.push_back(std::move(a));
  }
  return out;
}

void SlotFiller::ApplyPolarity(const std::vector<Token>& tokens,
                               std::vector<Annotation>& annotations,
                               const InformationNeed* need) const {
  for (Annotation& a : annotations) {
    const auto [cb, ce] = Chunk(tokens, a.token_begin);
    const auto [lb, le] = Clause(tokens, a.token_begin);
    bool hard_removal = false;
    for (size_t k = lb; k < le && !hard_removal; ++k) {
      if (k >= a.token_begin && k < a.token_end) continue;
      hard_removal = PhraseAt(tokens, k, registry_.removal_cues());
    }
    if (hard_removal) {
      a.removal = true;
      continue;
    }
    bool soft_removal = false;
    bool negated = false;
    for (size_t k = cb; k < a.token_begin; ++k) {
      size_t len = 0;
      if (PhraseAt(tokens, k, registry_.soft_removal_cues(), &len) &&
          k + len <= a.token_begin) {
        soft_removal = true;
      }
      if (PhraseAt(tokens, k, registry_.negation_cues(), &len) &&
          k + len <= a.token_begin) {
        negated = true;
      }
    }
    if (soft_removal && need != nullptr &&
        ContainsValue(*need, a.slot, a.value)) {
      a.removal = true;
      continue;
    }
    // Ranges cannot be negated as a single constraint; year expressions keep
    // their direction.
    if ((negated || soft_removal) && !IsNumeric(a.slot) &&
        a.op == Operator::kEq) {
      a.op = Operator::kNeq;
    }
  }
}

std::vector<Annotation> SlotFiller::Fill(const std::vector<Token>& tokens,
                                         const InformationNeed* need) const {
  std::vector<Annotation> resolved = ResolveSpans(Candidates(tokens));
  ApplyPolarity(tokens, resolved, need);
  return resolved;
}

std::vector<Annotation> SlotFiller::Fill(std::string_view utterance,
                                         const InformationNeed* need) const {
  return Fill(registry_.lemmatizer().Tokenize(utterance), need);
}

}  // namespace moviechat
