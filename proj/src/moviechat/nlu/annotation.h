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

#ifndef MOVIECHAT_NLU_ANNOTATION_H_
#define MOVIECHAT_NLU_ANNOTATION_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "moviechat/core/slot.h"

namespace moviechat {

enum class AnnotationSource { kLexicon, kSynonym, kYearPattern, kPersonAmbiguous };

std::string_view SourceToString(AnnotationSource source);

// A slot value found in the utterance.
struct Annotation {
  SlotName slot = SlotName::kGenres;
  Operator op = Operator::kEq;
  Value value;
  // Byte offsets into the utterance, [start, end).
  size_t start = 0;
  size_t end = 0;
  AnnotationSource source = AnnotationSource::kLexicon;
  // Token range, [token_begin, token_end).
  size_t token_begin = 0;
  size_t token_end = 0;
  // Annotations sharing a group stand or fall together during span
  // resolution: both halves of a year range, or an ambiguous person pair.
  int group = -1;
  // A title explicitly introduced by a cue such as "called".
  bool title_cued = false;
  // The user asked to drop this preference rather than add it.
  bool removal = false;

  bool operator==(const Annotation&) const = default;
};

// Keeps at most one reading of every text span. Overlapping annotations are
// decided by span length, then by slot priority (keywords, title, people,
// genres, release year). Annotations of one group are kept or dropped
// together. The result is ordered by position.
std::vector<Annotation> ResolveSpans(std::vector<Annotation> annotations);

// Lower is stronger. Exposed for tests.
int SlotPriority(const Annotation& annotation);

}  // namespace moviechat

#endif  // MOVIECHAT_NLU_ANNOTATION_H_
