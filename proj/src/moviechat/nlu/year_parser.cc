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

#include "moviechat/nlu/year_parser.h"

#include <cstdint>
#include <optional>
#include <regex>
#include <string>

namespace moviechat {
namespace {

constexpr int kMinYear = 1870;
constexpr int kMaxYear = 2100;

// Half-open year interval [lo, hi) covering tokens [tb, te).
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool exact = false;
  size_t tb = 0;
  size_t te = 0;
};

std::string Normalized(const std::string& surface) {
  std::string s;
  for (size_t i = 0; i < surface.size(); ++i) {
    if (i + 2 < surface.size() &&
        static_cast<unsigned char>(surface[i]) == 0xE2 &&
        static_cast<unsigned char>(surface[i + 1]) == 0x80 &&
        static_cast<unsigned char>(surface[i + 2]) == 0x99) {
      s.push_back('\'');
      i += 2;
    } else {
      s.push_back(static_cast<char>(
          std::tolower(static_cast<unsigned char>(surface[i]))));
    }
  }
  return s;
}

std::optional<Range> RangeAt(const std::vector<Token>& tokens, size_t i,
                             const YearOptions& options) {
  static const std::regex kDecade4(R"(^(\d{3})0'?s$)");
  static const std::regex kDecade2(R"(^(\d)0'?s$)");
  static const std::regex kOrdinal(R"(^(\d{1,2})(st|nd|rd|th)$)");
  static const std::regex kYear(R"(^\d{4}$)");
  if (i >= tokens.size()) return std::nullopt;
  const std::string s = Normalized(tokens[i].surface);
  std::smatch m;
  if (std::regex_match(s, m, kDecade4)) {
    const int start = std::stoi(m[1].str()) * 10;
    if (start < kMinYear - 9 || start > kMaxYear) return std::nullopt;
    return Range{start, start + 10, false, i, i + 1};
  }
  if (std::regex_match(s, m, kDecade2)) {
    const int start = options.two_digit_century + std::stoi(m[1].str()) * 10;
    return Range{start, start + 10, false, i, i + 1};
  }
  if (std::regex_match(s, m, kOrdinal) && i + 1 < tokens.size() &&
      tokens[i + 1].lemma == "century") {
    const int n = std::stoi(m[1].str());
    if (n < 19 || n > 21) return std::nullopt;
    return Range{(n - 1) * 100, n * 100, false, i, i + 2};
  }
  if (std::regex_match(s, kYear)) {
    const int year = std::stoi(s);
    if (year < kMinYear || year > kMaxYear) return std::nullopt;
    return Range{year, year + 1, true, i, i + 1};
  }
  return std::nullopt;
}

size_t SkipArticle(const std::vector<Token>& tokens, size_t i) {
  return i < tokens.size() && tokens[i].lemma == "the" ? i + 1 : i;
}

// True if one of `cues` ends right before token `end` (an article in between
// is allowed).
bool CueBefore(const std::vector<Token>& tokens, size_t end,
               const std::vector<Phrase>& cues) {
  for (size_t e : {end, end > 0 && tokens[end - 1].lemma == "the" ? end - 1
                                                                  : end}) {
    for (const Phrase& cue : cues) {
      if (cue.size() > e) continue;
      size_t len = 0;
      if (PhraseAt(tokens, e - cue.size(), {cue}, &len) && len == cue.size()) {
        return true;
      }
    }
  }
  return false;
}

Annotation Make(const std::vector<Token>& tokens, const Range& span,
                Operator op, std::int64_t year, int group) {
  Annotation a;
  a.slot = SlotName::kReleaseYear;
  a.op = op;
  a.value = year;
  a.token_begin = span.tb;
  a.token_end = span.te;
  a.start = tokens[span.tb].start;
  a.end = tokens[span.te - 1].end;
  a.source = AnnotationSource::kYearPattern;
  a.group = group;
  return a;
}

}  // namespace

std::vector<Annotation> ParseYearExpressions(const std::vector<Token>& tokens,
                                             const PatternRegistry& registry,
                                             const YearOptions& options,
                                             int first_group) {
  std::vector<Annotation> out;
  int group = first_group;
  size_t i = 0;
  while (i < tokens.size()) {
    size_t cue_len = 0;
    if (PhraseAt(tokens, i, registry.between_cues(), &cue_len)) {
      const auto first = RangeAt(tokens, SkipArticle(tokens, i + cue_len), options);
      if (first && first->te < tokens.size() &&
          tokens[first->te].lemma == "and") {
        const auto second =
            RangeAt(tokens, SkipArticle(tokens, first->te + 1), options);
        if (second) {
          const Range span{0, 0, false, first->tb, second->te};
          out.push_back(Make(tokens, span, Operator::kGeq, first->lo, group));
          if (second->exact) {
            out.push_back(Make(tokens, span, Operator::kLeq, second->lo, group));
          } else {
            out.push_back(Make(tokens, span, Operator::kLt, second->hi, group));
          }
          ++group;
          i = second->te;
          continue;
        }
      }
    }
    const auto range = RangeAt(tokens, i, options);
    if (!range) {
      ++i;
      continue;
    }
    if (CueBefore(tokens, i, registry.before_cues())) {
      out.push_back(Make(tokens, *range, Operator::kLt, range->lo, group));
    } else if (CueBefore(tokens, i, registry.after_cues())) {
      if (range->exact) {
        out.push_back(Make(tokens, *range, Operator::kGt, range->lo, group));
      } else {
        out.push_back(Make(tokens, *range, Operator::kGeq, range->hi, group));
      }
    } else if (CueBefore(tokens, i, registry.since_cues())) {
      out.push_back(Make(tokens, *range, Operator::kGeq, range->lo, group));
    } else if (range->exact) {
      out.push_back(Make(tokens, *range, Operator::kEq, range->lo, group));
    } else {
      out.push_back(Make(tokens, *range, Operator::kGeq, range->lo, group));
      out.push_back(Make(tokens, *range, Operator::kLt, range->hi, group));
    }
    ++group;
    i = range->te;
  }
  return out;
}

std::vector<Annotation> ParseYearExpression(std::string_view utterance,
                                            const PatternRegistry& registry,
                                            const YearOptions& options) {
  return ParseYearExpressions(registry.lemmatizer().Tokenize(utterance),
                              registry, options);
}

}  // namespace moviechat
