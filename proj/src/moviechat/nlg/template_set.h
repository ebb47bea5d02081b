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

#ifndef MOVIECHAT_NLG_TEMPLATE_SET_H_
#define MOVIECHAT_NLG_TEMPLATE_SET_H_

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/serialization.h"

namespace moviechat {

// Template key of an act: the elicited or informed slot, "count" for
// TooManyResults, "item" for Recommend, "exhausted" for NoResults when
// matches exist but were all shown, "" otherwise.
std::string Signature(const DialogueAct& act);

// Response templates keyed by (intent, signature), plus slot labels, fixed
// phrases and button labels. Loaded from an editable data file.
class TemplateSet {
 public:
  static TemplateSet FromJson(const Json& json);
  static TemplateSet Load(std::istream& in);
  static TemplateSet LoadFile(const std::filesystem::path& path);

  bool Has(Intent intent, const std::string& signature) const;
  // Throws ConfigError when no template exists.
  const std::vector<std::string>& Get(Intent intent,
                                      const std::string& signature) const;
  // Throws ConfigError for unknown keys.
  const std::string& Phrase(const std::string& key) const;
  const std::string& ButtonLabel(const std::string& key) const;
  std::string SlotLabel(SlotName slot) const;

  const std::map<std::pair<Intent, std::string>, std::vector<std::string>>&
  entries() const {
    return templates_;
  }

 private:
  std::map<std::pair<Intent, std::string>, std::vector<std::string>> templates_;
  std::map<std::string, std::string> slot_labels_;
  std::map<std::string, std::string> phrases_;
  std::map<std::string, std::string> buttons_;
};

// Placeholder names ("slot", "value", ...) used in a template string.
std::vector<std::string> Placeholders(const std::string& text);

// Replaces every {name} with bindings[name]. Throws ConfigError for names
// without a binding or an unterminated brace.
std::string Substitute(const std::string& text,
                      const std::map<std::string, std::string>& bindings);

}  // namespace moviechat

#endif  // MOVIECHAT_NLG_TEMPLATE_SET_H_
