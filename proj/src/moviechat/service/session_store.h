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

#ifndef MOVIECHAT_SERVICE_SESSION_STORE_H_
#define MOVIECHAT_SERVICE_SESSION_STORE_H_

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "moviechat/service/session.h"

namespace moviechat {

struct StoreOptions {
  // Unset keeps sessions in memory only.
  std::optional<std::filesystem::path> directory;
  std::int64_t ttl_ms = 24LL * 60 * 60 * 1000;
};

// Session table safe for concurrent use. Each session is a sequential actor:
// Acquire hands out exclusive leases in arrival (ticket) order.
//
// On disk a session is <id>.json (snapshot, replaced atomically) plus
// <id>.jsonl (append-only transcript). Lines are appended before the
// snapshot is replaced, so after a crash the transcript may run ahead of the
// snapshot; recovery truncates it back to the snapshot's length.
class SessionStore {
 private:
  struct Slot;

 public:
  explicit SessionStore(StoreOptions options = {});
  ~SessionStore();
  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  class Lease {
   public:
    Lease(Lease&& other) noexcept;
    Lease& operator=(Lease&&) = delete;
    ~Lease();
    const Session& session() const;

   private:
    friend class SessionStore;
    explicit Lease(std::shared_ptr<Slot> slot) : slot_(std::move(slot)) {}
    std::shared_ptr<Slot> slot_;
  };

  // Adds and persists a new session. Throws ConflictError if the id exists.
  void Create(const Session& session);

  // Waits for exclusive access. Throws NotFoundError for unknown or expired
  // sessions, loading persisted ones on first use.
  Lease Acquire(const std::string& id);

  // Persists `updated` (whose transcript extends the leased one) and makes
  // it current. On failure the leased session is unchanged.
  void Commit(Lease& lease, Session updated);

  bool Contains(const std::string& id);
  // Drops sessions idle longer than the TTL; returns how many.
  size_t Sweep(std::int64_t now_ms);
  // Ids known in memory or on disk.
  std::vector<std::string> Ids();

  const StoreOptions& options() const { return options_; }

  // Reads a persisted session, repairing a transcript that ran ahead of the
  // snapshot. Throws NotFoundError or IoError.
  static Session Recover(const std::filesystem::path& directory,
                         const std::string& id);

  static bool ValidId(const std::string& id);

 private:
  std::shared_ptr<Slot> Lookup(const std::string& id);
  void Persist(const Session& session, size_t persisted_lines);
  void Erase(const std::string& id);

  StoreOptions options_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Slot>> slots_;
};

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_SESSION_STORE_H_
