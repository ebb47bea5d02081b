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

#include "moviechat/core/dialogue_context.h"

namespace moviechat {

const std::vector<FeedbackLabel>* DialogueContext::LabelsFor(
    const std::string& item) const {
  auto it = entries_.find(item);
  return it == entries_.end() ? nullptr : &it->second;
}

DialogueContext RecordFeedback(const DialogueContext& context,
                               const std::string& item, FeedbackLabel label) {
  DialogueContext out = context;
  out.Append(item, label);
  return out;
}

}  // namespace moviechat
