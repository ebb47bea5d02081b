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

#include "moviechat/nlu/lemmatizer.h"

#include <algorithm>
#include <cctype>

namespace moviechat {
namespace {

const std::map<std::string, std::string>& DefaultExceptions() {
  static const auto* table = new std::map<std::string, std::string>{
      {"seen", "see"},       {"saw", "see"},         {"was", "be"},
      {"is", "be"},          {"are", "be"},          {"were", "be"},
      {"has", "have"},       {"had", "have"},        {"does", "do"},
      {"did", "do"},         {"made", "make"},       {"children", "child"},
      {"men", "man"},        {"women", "woman"},     {"people", "person"},
      {"this", "this"},      {"its", "its"},         {"news", "news"},
      {"series", "series"},  {"always", "always"},   {"yes", "yes"},
      {"thanks", "thanks"},  {"during", "during"},   {"nothing", "nothing"},
      {"anything", "anything"}, {"something", "something"},
      {"everything", "everything"}, {"morning", "morning"},
      {"evening", "evening"}, {"king", "king"},      {"thing", "thing"},
      {"sing", "sing"},      {"bring", "bring"},     {"ring", "ring"},
      {"wedding", "wedding"}, {"less", "less"},      {"unless", "unless"},
      {"mice", "mouse"},     {"feet", "foot"},
      // -ie nouns, which the -ies rule would turn into -y.
      {"movies", "movie"},   {"zombies", "zombie"},  {"cookies", "cookie"},
      {"rookies", "rookie"}, {"pies", "pie"},        {"ties", "tie"},
      {"lies", "lie"},       {"dies", "die"},        {"hippies", "hippie"},
      {"genies", "genie"},   {"selfies", "selfie"},  {"prairies", "prairie"},
      {"calories", "calorie"}, {"brownies", "brownie"},
      {"goalies", "goalie"}, {"indies", "indie"},    {"aunties", "auntie"},
      {"talkies", "talkie"},
  };
  return *table;
}

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool HasVowel(std::string_view s) {
  for (char c : s) {
    if (IsVowel(c) || c == 'y') return true;
  }
  return false;
}

// "starr" -> "star", "runn" -> "run"; keeps ll/ss/zz ("spell", "kiss").
std::string Undouble(std::string stem) {
  const size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !IsVowel(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z') {
    stem.pop_back();
    return stem;
  }
  // Short consonant-vowel-consonant stems lost a silent e: "lik" -> "like".
  if (n == 3 && !IsVowel(stem[0]) && IsVowel(stem[1]) && !IsVowel(stem[2]) &&
      stem[2] != 'w' && stem[2] != 'x' && stem[2] != 'y') {
    stem.push_back('e');
  }
  return stem;
}

bool IsAlphaWord(std::string_view w) {
  for (char c : w) {
    if (!std::islower(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

bool IsWordByte(unsigned char c) {
  return std::isalnum(c) || c >= 0x80;
}

int BreakStrength(char c) {
  if (c == ',' || c == ':') return 1;
  if (c == ';' || c == '.' || c == '!' || c == '?') return 2;
  return 0;
}

}  // namespace

Lemmatizer::Lemmatizer() : exceptions_(DefaultExceptions()) {}

Lemmatizer::Lemmatizer(std::map<std::string, std::string> exceptions)
    : exceptions_(std::move(exceptions)) {}

void Lemmatizer::AddExceptions(
    const std::map<std::string, std::string>& exceptions) {
  for (const auto& [word, lemma] : exceptions) exceptions_[word] = lemma;
}

std::string Lemmatizer::Lemma(std::string_view word) const {
  std::string w;
  w.reserve(word.size());
  for (size_t i = 0; i < word.size(); ++i) {
    // U+2019 RIGHT SINGLE QUOTATION MARK -> '
    if (i + 2 < word.size() && static_cast<unsigned char>(word[i]) == 0xE2 &&
        static_cast<unsigned char>(word[i + 1]) == 0x80 &&
        static_cast<unsigned char>(word[i + 2]) == 0x99) {
      w.push_back('\'');
      i += 2;
      continue;
    }
    w.push_back(static_cast<char>(
        std::tolower(static_cast<unsigned char>(word[i]))));
  }
  if (auto it = exceptions_.find(w); it != exceptions_.end()) {
    return it->second;
  }
  if (EndsWith(w, "'s") && w.size() > 2) w.resize(w.size() - 2);
  if (w.size() <= 3 || !IsAlphaWord(w)) return w;

  if (EndsWith(w, "ies") && w.size() > 4) {
    return w.substr(0, w.size() - 3) + "y";
  }
  if (EndsWith(w, "sses")) return w.substr(0, w.size() - 2);
  if (EndsWith(w, "xes") || EndsWith(w, "ches") || EndsWith(w, "shes") ||
      EndsWith(w, "zzes")) {
    return w.substr(0, w.size() - 2);
  }
  if (EndsWith(w, "s") && !EndsWith(w, "ss") && !EndsWith(w, "us") &&
      !EndsWith(w, "is")) {
    return w.substr(0, w.size() - 1);
  }
  if (EndsWith(w, "ing") && w.size() >= 6) {
    const std::string stem = w.substr(0, w.size() - 3);
    if (HasVowel(stem)) return Undouble(stem);
  }
  if (EndsWith(w, "ed") && w.size() >= 5) {
    const std::string stem = w.substr(0, w.size() - 2);
    if (HasVowel(stem)) return Undouble(stem);
  }
  return w;
}

std::vector<Token> Lemmatizer::Tokenize(std::string_view text) const {
  std::vector<Token> tokens;
  int pending_break = 0;
  size_t i = 0;
  const size_t n = text.size();
  auto is_apostrophe = [&](size_t at, size_t* width) {
    if (text[at] == '\'') {
      *width = 1;
      return true;
    }
    if (at + 2 < n && static_cast<unsigned char>(text[at]) == 0xE2 &&
        static_cast<unsigned char>(text[at + 1]) == 0x80 &&
        static_cast<unsigned char>(text[at + 2]) == 0x99) {
      *width = 3;
      return true;
    }
    return false;
  };
  while (i < n) {
    size_t width = 0;
    const auto c = static_cast<unsigned char>(text[i]);
    if (is_apostrophe(i, &width) || !IsWordByte(c)) {
      pending_break = std::max(pending_break, BreakStrength(text[i]));
      i += width > 0 ? width : 1;
      continue;
    }
    const size_t start = i;
    while (i < n) {
      size_t joiner = 0;
      if (is_apostrophe(i, &joiner) || text[i] == '-') {
        if (joiner == 0) joiner = 1;
        // Keep joiners only between word characters.
        size_t next_width = 0;
        const size_t next = i + joiner;
        if (next < n && IsWordByte(static_cast<unsigned char>(text[next])) &&
            !is_apostrophe(next, &next_width)) {
          i = next;
          continue;
        }
        break;
      }
      if (!IsWordByte(static_cast<unsigned char>(text[i]))) break;
      ++i;
    }
    Token t;
    t.surface = std::string(text.substr(start, i - start));
    t.lemma = Lemma(t.surface);
    t.start = start;
    t.end = i;
    t.break_before = tokens.empty() ? 0 : pending_break;
    pending_break = 0;
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::string Lemmatizer::LemmaKey(std::string_view text) const {
  const std::vector<Token> tokens = Tokenize(text);
  return JoinLemmas(tokens, 0, tokens.size());
}

std::string JoinLemmas(const std::vector<Token>& tokens, size_t begin,
                       size_t end) {
  std::string key;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) key.push_back(' ');
    key += tokens[i].lemma;
  }
  return key;
}

}  // namespace moviechat
