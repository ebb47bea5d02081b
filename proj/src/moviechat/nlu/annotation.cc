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

#include "moviechat/nlu/annotation.h"

#include <algorithm>
#include <map>

namespace moviechat {

std::string_view SourceToString(AnnotationSource source) {
  switch (source) {
    case AnnotationSource::kLexicon:
      return "lexicon";
    case AnnotationSource::kSynonym:
      return "synonym";
    case AnnotationSource::kYearPattern:
      return "year_pattern";
    case AnnotationSource::kPersonAmbiguous:
      return "person_ambiguous";
  }
  return "lexicon";
}

int SlotPriority(const Annotation& a) {
  if (a.slot == SlotName::kTitle && a.title_cued) return -1;
  switch (a.slot) {
    case SlotName::kKeywords:
      return 0;
    case SlotName::kTitle:
      return 1;
    case SlotName::kActors:
    case SlotName::kDirectors:
      return 2;
    case SlotName::kGenres:
      return 3;
    case SlotName::kReleaseYear:
      return 4;
    default:
      return 5;
  }
}

std::vector<Annotation> ResolveSpans(std::vector<Annotation> annotations) {
  // Bundle annotations into units; ungrouped annotations are units of one.
  std::vector<std::vector<size_t>> units;
  std::map<int, size_t> unit_of_group;
  for (size_t i = 0; i < annotations.size(); ++i) {
    const int g = annotations[i].group;
    if (g < 0) {
      units.push_back({i});
      continue;
    }
    auto [it, inserted] = unit_of_group.emplace(g, units.size());
    if (inserted) units.emplace_back();
    units[it->second].push_back(i);
  }
  struct Key {
    size_t start, end, tokens;
    int priority;
  };
  auto key_of = [&](const std::vector<size_t>& unit) {
    Key k{annotations[unit[0]].start, annotations[unit[0]].end, 0, 100};
    size_t tb = annotations[unit[0]].token_begin;
    size_t te = annotations[unit[0]].token_end;
    for (size_t i : unit) {
      const Annotation& a = annotations[i];
      k.start = std::min(k.start, a.start);
      k.end = std::max(k.end, a.end);
      tb = std::min(tb, a.token_begin);
      te = std::max(te, a.token_end);
      k.priority = std::min(k.priority, SlotPriority(a));
    }
    k.tokens = te - tb;
    return k;
  };
  std::vector<Key> keys;
  for (const auto& unit : units) keys.push_back(key_of(unit));
  std::vector<size_t> order(units.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const Key& x = keys[a];
    const Key& y = keys[b];
    if (x.tokens != y.tokens) return x.tokens > y.tokens;
    if (x.end - x.start != y.end - y.start) {
      return x.end - x.start > y.end - y.start;
    }
    if (x.priority != y.priority) return x.priority < y.priority;
    return x.start < y.start;
  });
  std::vector<bool> keep(annotations.size(), false);
  std::vector<const Annotation*> accepted;
  for (size_t u : order) {
    bool clash = false;
    for (size_t i : units[u]) {
      for (const Annotation* other : accepted) {
        if (annotations[i].start < other->end &&
            other->start < annotations[i].end) {
          clash = true;
        }
      }
    }
    if (clash) continue;
    for (size_t i : units[u]) {
      keep[i] = true;
      accepted.push_back(&annotations[i]);
    }
  }
  std::vector<Annotation> out;
  for (size_t i = 0; i < annotations.size(); ++i) {
    if (keep[i]) out.push_back(annotations[i]);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Annotation& a, const Annotation& b) {
                     return a.start < b.start;
                   });
  return out;
}

}  // namespace moviechat
