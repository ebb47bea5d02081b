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

#ifndef MOVIECHAT_SERVICE_HTTP_SERVER_H_
#define MOVIECHAT_SERVICE_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "moviechat/service/wire_api.h"

namespace moviechat {

// Serves a WireApi over HTTP/1.1. Each connection runs on a pool thread;
// per-session ordering comes from the store's leases.
class HttpServer {
 public:
  explicit HttpServer(WireApi& api);
  ~HttpServer();

  // Blocks until Stop(). `address` is "host:port". Returns false if the
  // socket cannot be bound.
  bool Listen(const std::string& address);
  // Binds to an ephemeral port on `host` and returns it; serve with Run().
  int BindAny(const std::string& host);
  bool Run();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Splits "host:port"; throws ValidationError.
std::pair<std::string, int> ParseListenAddress(const std::string& address);

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_HTTP_SERVER_H_
