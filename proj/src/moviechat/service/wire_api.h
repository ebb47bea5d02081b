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

#ifndef MOVIECHAT_SERVICE_WIRE_API_H_
#define MOVIECHAT_SERVICE_WIRE_API_H_

#include <map>
#include <string>

#include "moviechat/service/service.h"

namespace moviechat {

struct WireRequest {
  std::string method;  // "GET", "POST"
  std::string path;    // without query string
  std::map<std::string, std::string> query;
  std::string body;
};

struct WireResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Transport-free router for the turn protocol. Routes:
//
//   GET  /v1/health
//   POST /v1/sessions                      {"seed": 7}? -> 201 TurnResponse
//   GET  /v1/sessions/{id}                 -> session summary
//   POST /v1/sessions/{id}/turns           {"utterance": "..."} |
//                                          {"payload": <act or command>}
//   GET  /v1/sessions/{id}/transcript?format=structured|text
//
// Failures are {"error": {"code": ..., "message": ...}} with 400, 404, 405,
// 409 or 500.
class WireApi {
 public:
  explicit WireApi(ChatService& service) : service_(service) {}

  WireResponse Handle(const WireRequest& request);

 private:
  WireResponse Dispatch(const WireRequest& request);

  ChatService& service_;
};

// Parses the body of a turn request. Throws ValidationError.
TurnInput TurnInputFromJson(const Json& json);

WireResponse ErrorResponse(int status, const std::string& code,
                           const std::string& message);

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_WIRE_API_H_
