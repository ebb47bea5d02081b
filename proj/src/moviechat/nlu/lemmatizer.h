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

#ifndef MOVIECHAT_NLU_LEMMATIZER_H_
#define MOVIECHAT_NLU_LEMMATIZER_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace moviechat {

// A word of the input. Offsets are byte positions into the original text.
struct Token {
  std::string surface;
  std::string lemma;
  size_t start = 0;
  size_t end = 0;
  // Punctuation between this token and the previous one: 0 none, 1 comma or
  // colon, 2 sentence-level (. ; ! ?).
  int break_before = 0;

  bool operator==(const Token&) const = default;
};

// Rule-based lemmatizer: strips plural -s/-es, -ies -> y, and -ing/-ed with
// consonant undoubling. Irregular forms come from an exception table.
class Lemmatizer {
 public:
  // Uses the built-in exception table.
  Lemmatizer();
  explicit Lemmatizer(std::map<std::string, std::string> exceptions);

  // Adds to (or overrides) the exception table.
  void AddExceptions(const std::map<std::string, std::string>& exceptions);

  std::string Lemma(std::string_view word) const;

  // Splits on whitespace and punctuation. Apostrophes and hyphens inside a
  // word are kept ("don't", "sci-fi"); bytes >= 0x80 count as letters.
  std::vector<Token> Tokenize(std::string_view text) const;

  // Lemmas of Tokenize(text) joined by single spaces.
  std::string LemmaKey(std::string_view text) const;

  const std::map<std::string, std::string>& exceptions() const {
    return exceptions_;
  }

 private:
  std::map<std::string, std::string> exceptions_;
};

std::string JoinLemmas(const std::vector<Token>& tokens, size_t begin,
                       size_t end);

}  // namespace moviechat

#endif  // MOVIECHAT_NLU_LEMMATIZER_H_
