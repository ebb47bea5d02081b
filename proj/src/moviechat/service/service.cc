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

#include "moviechat/service/service.h"

#include <random>

#include "moviechat/core/errors.h"

namespace moviechat {

ChatService::ChatService(const Engine& engine, SessionStore& store,
                         std::optional<std::uint64_t> default_seed,
                         Clock clock)
    : engine_(engine),
      store_(store),
      default_seed_(default_seed),
      clock_(std::move(clock)) {}

TurnResponse ChatService::CreateSession(std::optional<std::uint64_t> seed) {
  if (!seed) seed = default_seed_;
  if (!seed) {
    std::random_device device;
    seed = (static_cast<std::uint64_t>(device()) << 32) | device();
  }
  // Ids are 128 random bits; a collision means a broken entropy source, so
  // a couple of retries is plenty.
  for (int attempt = 0;; ++attempt) {
    auto [session, response] = engine_.Open(NewSessionId(), *seed, clock_());
    try {
      store_.Create(session);
      return response;
    } catch (const ConflictError&) {
      if (attempt >= 3) throw;
    }
  }
}

TurnResponse ChatService::PostTurn(const std::string& session_id,
                                   const TurnInput& input) {
  SessionStore::Lease lease = store_.Acquire(session_id);
  auto [next, response] = engine_.Turn(lease.session(), input, clock_());
  store_.Commit(lease, std::move(next));
  return response;
}

Session ChatService::Get(const std::string& session_id) {
  SessionStore::Lease lease = store_.Acquire(session_id);
  return lease.session();
}

std::string ChatService::ExportTranscript(const std::string& session_id,
                                          TranscriptFormat format) {
  const Session session = Get(session_id);
  if (format == TranscriptFormat::kText) return engine_.ExportText(session);
  return engine_.ExportStructured(session).dump(2);
}

}  // namespace moviechat
