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

#include "moviechat/service/session.h"

#include <chrono>
#include <cstdio>
#include <random>

#include "moviechat/core/errors.h"

namespace moviechat {

Json ToJson(const TranscriptEntry& entry) {
  Json json{{"timestamp_ms", entry.timestamp_ms},
            {"author", AuthorToString(entry.author)},
            {"text", entry.text}};
  if (entry.payload) json["payload"] = ToJson(*entry.payload);
  if (entry.command) json["command"] = *entry.command;
  json["acts"] = ActsToJson(entry.acts);
  return json;
}

TranscriptEntry TranscriptEntryFromJson(const Json& json) {
  try {
    TranscriptEntry entry;
    entry.timestamp_ms = json.at("timestamp_ms").get<std::int64_t>();
    entry.author = ParseAuthor(json.at("author").get<std::string>());
    entry.text = json.at("text").get<std::string>();
    if (json.contains("payload")) entry.payload = ActFromJson(json["payload"]);
    if (json.contains("command")) {
      entry.command = json["command"].get<std::string>();
    }
    entry.acts = ActsFromJson(json.at("acts"));
    return entry;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("transcript entry: ") + e.what());
  }
}

std::uint64_t Session::turn_index() const {
  std::uint64_t n = 0;
  for (const TranscriptEntry& e : transcript) {
    if (e.author == Author::kUser) ++n;
  }
  return n;
}

Json SnapshotToJson(const Session& session) {
  return Json{{"id", session.id},
              {"created_at_ms", session.created_at_ms},
              {"last_active_ms", session.last_active_ms},
              {"rng_seed", session.rng_seed},
              {"transcript_length", session.transcript.size()},
              {"state", ToJson(session.state)},
              {"context", ToJson(session.context)}};
}

size_t SnapshotFromJson(const Json& json, Session* session) {
  try {
    session->id = json.at("id").get<std::string>();
    session->created_at_ms = json.at("created_at_ms").get<std::int64_t>();
    session->last_active_ms = json.at("last_active_ms").get<std::int64_t>();
    session->rng_seed = json.at("rng_seed").get<std::uint64_t>();
    session->state = StateFromJson(json.at("state"));
    session->context = ContextFromJson(json.at("context"));
    return json.at("transcript_length").get<size_t>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("snapshot: ") + e.what());
  }
}

std::int64_t NowMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

std::string NewSessionId() {
  static thread_local std::random_device device;
  std::string id;
  for (int i = 0; i < 4; ++i) {
    char buf[9];
    std::snprintf(buf, sizeof(buf), "%08x", static_cast<unsigned>(device()));
    id += buf;
  }
  return id;
}

}  // namespace moviechat
