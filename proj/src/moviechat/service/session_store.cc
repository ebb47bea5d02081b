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

#include "moviechat/service/session_store.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

#include "moviechat/core/errors.h"

namespace moviechat {

namespace fs = std::filesystem;

struct SessionStore::Slot {
  std::mutex mu;
  std::condition_variable cv;
  std::uint64_t next_ticket = 0;
  std::uint64_t serving = 0;
  Session session;
  size_t persisted_lines = 0;
  bool dead = false;
};

namespace {

[[noreturn]] void Fail(const std::string& what, const fs::path& path) {
  throw IoError(what + " " + path.string() + ": " + std::strerror(errno));
}

void WriteAll(int fd, const std::string& data, const fs::path& path) {
  size_t done = 0;
  while (done < data.size()) {
    const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      Fail("write", path);
    }
    done += static_cast<size_t>(n);
  }
}

void SyncDirectory(const fs::path& dir) {
  const int fd = ::open(dir.c_str(), O_RDONLY | O_DIRECTORY);
  if (fd < 0) return;
  ::fsync(fd);
  ::close(fd);
}

void AtomicWrite(const fs::path& path, const std::string& data) {
  const fs::path tmp = path.string() + ".tmp";
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) Fail("open", tmp);
  WriteAll(fd, data, tmp);
  if (::fsync(fd) != 0) {
    ::close(fd);
    Fail("fsync", tmp);
  }
  ::close(fd);
  if (::rename(tmp.c_str(), path.c_str()) != 0) Fail("rename", tmp);
  SyncDirectory(path.parent_path());
}

void AppendLines(const fs::path& path, const std::string& data) {
  const int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) Fail("open", path);
  WriteAll(fd, data, path);
  if (::fsync(fd) != 0) {
    ::close(fd);
    Fail("fsync", path);
  }
  ::close(fd);
}

fs::path SnapshotPath(const fs::path& dir, const std::string& id) {
  return dir / (id + ".json");
}

fs::path TranscriptPath(const fs::path& dir, const std::string& id) {
  return dir / (id + ".jsonl");
}

}  // namespace

SessionStore::SessionStore(StoreOptions options)
    : options_(std::move(options)) {
  if (options_.directory) {
    std::error_code ec;
    fs::create_directories(*options_.directory, ec);
    if (ec) {
      throw IoError("cannot create " + options_.directory->string() + ": " +
                    ec.message());
    }
  }
}

SessionStore::~SessionStore() = default;

SessionStore::Lease::Lease(Lease&& other) noexcept
    : slot_(std::move(other.slot_)) {}

SessionStore::Lease::~Lease() {
  if (!slot_) return;
  {
    std::lock_guard<std::mutex> lock(slot_->mu);
    ++slot_->serving;
  }
  slot_->cv.notify_all();
}

const Session& SessionStore::Lease::session() const { return slot_->session; }

bool SessionStore::ValidId(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                    (c >= 'A' && c <= 'Z') || c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

Session SessionStore::Recover(const fs::path& directory,
                              const std::string& id) {
  if (!ValidId(id)) throw NotFoundError("no session " + id);
  const fs::path snap = SnapshotPath(directory, id);
  std::ifstream in(snap);
  if (!in) throw NotFoundError("no session " + id);
  Session session;
  size_t length = 0;
  try {
    length = SnapshotFromJson(Json::parse(in), &session);
  } catch (const Json::exception& e) {
    throw IoError("corrupt snapshot " + snap.string() + ": " + e.what());
  }

  const fs::path log = TranscriptPath(directory, id);
  std::ifstream tin(log, std::ios::binary);
  std::string line;
  std::streamoff keep = 0;
  while (session.transcript.size() < length && std::getline(tin, line)) {
    if (tin.eof()) break;  // torn last line without newline
    try {
      session.transcript.push_back(TranscriptEntryFromJson(Json::parse(line)));
    } catch (const std::exception& e) {
      throw IoError("corrupt transcript " + log.string() + ": " + e.what());
    }
    keep = tin.tellg();
  }
  if (session.transcript.size() < length) {
    throw IoError("transcript " + log.string() + " is shorter than snapshot");
  }
  tin.close();
  std::error_code ec;
  const auto size = fs::file_size(log, ec);
  if (!ec && size > static_cast<std::uintmax_t>(keep)) {
    fs::resize_file(log, static_cast<std::uintmax_t>(keep), ec);
    if (ec) throw IoError("cannot truncate " + log.string());
  }
  return session;
}

std::shared_ptr<SessionStore::Slot> SessionStore::Lookup(
    const std::string& id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = slots_.find(id);
  if (it != slots_.end()) return it->second;
  if (!options_.directory) return nullptr;
  Session session;
  try {
    session = Recover(*options_.directory, id);
  } catch (const NotFoundError&) {
    return nullptr;
  }
  auto slot = std::make_shared<Slot>();
  slot->persisted_lines = session.transcript.size();
  slot->session = std::move(session);
  slots_.emplace(id, slot);
  return slot;
}

void SessionStore::Persist(const Session& session, size_t persisted_lines) {
  if (!options_.directory) return;
  const fs::path& dir = *options_.directory;
  std::string lines;
  for (size_t i = persisted_lines; i < session.transcript.size(); ++i) {
    lines += ToJson(session.transcript[i]).dump();
    lines += '\n';
  }
  if (!lines.empty()) AppendLines(TranscriptPath(dir, session.id), lines);
  AtomicWrite(SnapshotPath(dir, session.id), SnapshotToJson(session).dump(2));
}

void SessionStore::Create(const Session& session) {
  if (!ValidId(session.id)) {
    throw ValidationError("invalid session id '" + session.id + "'");
  }
  auto slot = std::make_shared<Slot>();
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (slots_.count(session.id) > 0 ||
        (options_.directory &&
         fs::exists(SnapshotPath(*options_.directory, session.id)))) {
      throw ConflictError("session " + session.id + " already exists");
    }
    slot->session = session;
    slots_.emplace(session.id, slot);
  }
  try {
    Persist(session, 0);
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu_);
    slots_.erase(session.id);
    throw;
  }
  slot->persisted_lines = session.transcript.size();
}

SessionStore::Lease SessionStore::Acquire(const std::string& id) {
  if (!ValidId(id)) throw NotFoundError("no session " + id);
  std::shared_ptr<Slot> slot = Lookup(id);
  if (!slot) throw NotFoundError("no session " + id);
  {
    std::unique_lock<std::mutex> lock(slot->mu);
    const std::uint64_t ticket = slot->next_ticket++;
    slot->cv.wait(lock, [&] { return slot->serving == ticket; });
    if (!slot->dead &&
        NowMs() - slot->session.last_active_ms <= options_.ttl_ms) {
      return Lease(slot);
    }
    ++slot->serving;
  }
  slot->cv.notify_all();
  Erase(id);
  throw NotFoundError("session " + id + " expired");
}

void SessionStore::Commit(Lease& lease, Session updated) {
  Slot& slot = *lease.slot_;
  if (updated.id != slot.session.id ||
      updated.transcript.size() < slot.persisted_lines) {
    throw ValidationError("commit does not extend session " + slot.session.id);
  }
  Persist(updated, slot.persisted_lines);
  slot.persisted_lines = updated.transcript.size();
  slot.session = std::move(updated);
}

void SessionStore::Erase(const std::string& id) {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = slots_.find(id);
    if (it != slots_.end()) {
      slot = it->second;
      slots_.erase(it);
    }
  }
  if (slot) {
    std::lock_guard<std::mutex> lock(slot->mu);
    slot->dead = true;
  }
  if (options_.directory) {
    std::error_code ec;
    fs::remove(SnapshotPath(*options_.directory, id), ec);
    fs::remove(TranscriptPath(*options_.directory, id), ec);
  }
}

bool SessionStore::Contains(const std::string& id) {
  return ValidId(id) && Lookup(id) != nullptr;
}

size_t SessionStore::Sweep(std::int64_t now_ms) {
  std::vector<std::string> expired;
  for (const std::string& id : Ids()) {
    std::shared_ptr<Slot> slot = Lookup(id);
    if (!slot) continue;
    std::lock_guard<std::mutex> lock(slot->mu);
    // Sessions with a turn in flight are active by definition.
    if (slot->serving != slot->next_ticket) continue;
    if (now_ms - slot->session.last_active_ms > options_.ttl_ms) {
      expired.push_back(id);
    }
  }
  for (const std::string& id : expired) Erase(id);
  return expired.size();
}

std::vector<std::string> SessionStore::Ids() {
  std::set<std::string> ids;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [id, slot] : slots_) ids.insert(id);
  }
  if (options_.directory) {
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(*options_.directory, ec)) {
      if (entry.path().extension() != ".json") continue;
      const std::string id = entry.path().stem().string();
      if (ValidId(id)) ids.insert(id);
    }
  }
  return {ids.begin(), ids.end()};
}

}  // namespace moviechat
