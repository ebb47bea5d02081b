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

#ifndef MOVIECHAT_SERVICE_SERVICE_H_
#define MOVIECHAT_SERVICE_SERVICE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "moviechat/service/engine.h"
#include "moviechat/service/session_store.h"

namespace moviechat {

enum class TranscriptFormat { kStructured, kText };

// Session lifecycle on top of the engine and the store. Both the HTTP front
// and the REPL go through this class.
class ChatService {
 public:
  using Clock = std::function<std::int64_t()>;

  // `default_seed` pins the seed of sessions created without one; otherwise
  // each gets a fresh random seed.
  ChatService(const Engine& engine, SessionStore& store,
              std::optional<std::uint64_t> default_seed = std::nullopt,
              Clock clock = NowMs);

  TurnResponse CreateSession(std::optional<std::uint64_t> seed = std::nullopt);
  // Throws NotFoundError, ConflictError or ValidationError.
  TurnResponse PostTurn(const std::string& session_id, const TurnInput& input);
  Session Get(const std::string& session_id);
  // Structured export as JSON text, or the plain transcript.
  std::string ExportTranscript(const std::string& session_id,
                               TranscriptFormat format);

  const Engine& engine() const { return engine_; }
  SessionStore& store() { return store_; }

 private:
  const Engine& engine_;
  SessionStore& store_;
  std::optional<std::uint64_t> default_seed_;
  Clock clock_;
};

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_SERVICE_H_
