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

#include "moviechat/service/http_server.h"

#include <httplib.h>

#include "moviechat/core/errors.h"

namespace moviechat {

struct HttpServer::Impl {
  httplib::Server server;
};

std::pair<std::string, int> ParseListenAddress(const std::string& address) {
  const auto colon = address.rfind(':');
  if (colon == std::string::npos) {
    throw ValidationError("listen address must be host:port");
  }
  const std::string host = address.substr(0, colon);
  int port = 0;
  try {
    size_t used = 0;
    port = std::stoi(address.substr(colon + 1), &used);
    if (used != address.size() - colon - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ValidationError("bad port in '" + address + "'");
  }
  if (port < 0 || port > 65535) throw ValidationError("port out of range");
  return {host.empty() ? "0.0.0.0" : host, port};
}

HttpServer::HttpServer(WireApi& api) : impl_(std::make_unique<Impl>()) {
  auto handler = [&api](const httplib::Request& req, httplib::Response& res) {
    WireRequest w;
    w.method = req.method;
    w.path = req.path;
    for (const auto& [k, v] : req.params) w.query[k] = v;
    w.body = req.body;
    const WireResponse out = api.Handle(w);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  impl_->server.Get(R"(/.*)", handler);
  impl_->server.Post(R"(/.*)", handler);
  impl_->server.Delete(R"(/.*)", handler);
  impl_->server.Put(R"(/.*)", handler);
}

HttpServer::~HttpServer() = default;

bool HttpServer::Listen(const std::string& address) {
  const auto [host, port] = ParseListenAddress(address);
  return impl_->server.listen(host, port);
}

int HttpServer::BindAny(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::Run() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

}  // namespace moviechat
