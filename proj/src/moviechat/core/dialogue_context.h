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

#ifndef MOVIECHAT_CORE_DIALOGUE_CONTEXT_H_
#define MOVIECHAT_CORE_DIALOGUE_CONTEXT_H_

#include <map>
#include <string>
#include <vector>

#include "moviechat/core/dialogue_act.h"

namespace moviechat {

// Per-item feedback history. An item gets an entry (possibly with no labels
// yet) as soon as it is recommended, so entries double as the set of items
// that must not be recommended again.
class DialogueContext {
 public:
  using Entries = std::map<std::string, std::vector<FeedbackLabel>>;

  DialogueContext() = default;
  explicit DialogueContext(Entries entries) : entries_(std::move(entries)) {}

  const Entries& entries() const { return entries_; }
  bool Contains(const std::string& item) const {
    return entries_.count(item) > 0;
  }
  const std::vector<FeedbackLabel>* LabelsFor(const std::string& item) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }

  void Append(const std::string& item, FeedbackLabel label) {
    entries_[item].push_back(label);
  }
  // Creates an empty entry if absent.
  void Register(const std::string& item) { entries_[item]; }

  bool operator==(const DialogueContext&) const = default;

 private:
  Entries entries_;
};

DialogueContext RecordFeedback(const DialogueContext& context,
                               const std::string& item, FeedbackLabel label);

}  // namespace moviechat

#endif  // MOVIECHAT_CORE_DIALOGUE_CONTEXT_H_
