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

#ifndef MOVIECHAT_SERVICE_SESSION_H_
#define MOVIECHAT_SERVICE_SESSION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_context.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/core/serialization.h"

namespace moviechat {

// One transcript line. A user line carries either free text, a button
// payload or a slash command; its acts are what the engine applied. An agent
// line carries the rendered utterances joined by newlines and the agent acts.
struct TranscriptEntry {
  std::int64_t timestamp_ms = 0;
  Author author = Author::kUser;
  std::string text;
  std::optional<DialogueAct> payload;
  std::optional<std::string> command;
  std::vector<DialogueAct> acts;

  bool operator==(const TranscriptEntry&) const = default;
};

Json ToJson(const TranscriptEntry& entry);
TranscriptEntry TranscriptEntryFromJson(const Json& json);

struct Session {
  std::string id;
  DialogueState state;
  DialogueContext context;
  std::vector<TranscriptEntry> transcript;
  std::int64_t created_at_ms = 0;
  std::int64_t last_active_ms = 0;
  std::uint64_t rng_seed = 0;

  bool closed() const { return state.agent_stage == AgentStage::kClosing; }
  // Number of user turns so far; the opening turn is 0.
  std::uint64_t turn_index() const;
};

// Snapshot record: everything except the transcript lines, plus how many of
// them the snapshot covers.
Json SnapshotToJson(const Session& session);
// Fills all fields but the transcript; returns the covered line count.
size_t SnapshotFromJson(const Json& json, Session* session);

std::int64_t NowMs();

// Fresh opaque id: 32 hex characters from the system entropy source.
std::string NewSessionId();

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_SESSION_H_
