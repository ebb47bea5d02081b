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

#ifndef MOVIECHAT_NLU_YEAR_PARSER_H_
#define MOVIECHAT_NLU_YEAR_PARSER_H_

#include <string_view>
#include <vector>

#include "moviechat/nlu/annotation.h"
#include "moviechat/nlu/lemmatizer.h"
#include "moviechat/nlu/pattern_registry.h"

namespace moviechat {

struct YearOptions {
  // Century that bare two-digit decades ("90s", "20s") fall into.
  int two_digit_century = 1900;
};

// Finds release-year expressions: decades ("90s", "1950s"), exact years
// ("1995"), centuries ("20th century"), optionally modified by "before",
// "after", "since" or "between ... and ...". Every expression yields one
// annotation group.
std::vector<Annotation> ParseYearExpressions(const std::vector<Token>& tokens,
                                             const PatternRegistry& registry,
                                             const YearOptions& options = {},
                                             int first_group = 0);

std::vector<Annotation> ParseYearExpression(std::string_view utterance,
                                            const PatternRegistry& registry,
                                            const YearOptions& options = {});

}  // namespace moviechat

#endif  // MOVIECHAT_NLU_YEAR_PARSER_H_
