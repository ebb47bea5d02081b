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

#include "moviechat/service/wire_api.h"

#include <vector>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

std::vector<std::string> SplitPath(const std::string& path) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : path) {
    if (c == '/') {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

WireResponse JsonResponse(int status, const Json& json) {
  return WireResponse{status, "application/json", json.dump()};
}

Json ParseBody(const std::string& body) {
  if (body.empty()) return Json::object();
  try {
    Json json = Json::parse(body);
    if (!json.is_object()) throw ValidationError("body must be a JSON object");
    return json;
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON body: ") + e.what());
  }
}

}  // namespace

WireResponse ErrorResponse(int status, const std::string& code,
                           const std::string& message) {
  return JsonResponse(status,
                      Json{{"error", {{"code", code}, {"message", message}}}});
}

TurnInput TurnInputFromJson(const Json& json) {
  const bool has_text = json.contains("utterance");
  const bool has_payload = json.contains("payload");
  if (has_text == has_payload) {
    throw ValidationError("turn needs exactly one of utterance or payload");
  }
  try {
    if (has_text) return TurnInput::Text(json["utterance"].get<std::string>());
    const Json& payload = json["payload"];
    if (payload.is_object() && payload.contains("command")) {
      return TurnInput::Command(payload["command"].get<std::string>());
    }
    return TurnInput::Payload(ActFromJson(payload));
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("turn: ") + e.what());
  }
}

WireResponse WireApi::Handle(const WireRequest& request) {
  try {
    return Dispatch(request);
  } catch (const ValidationError& e) {
    return ErrorResponse(400, "invalid_request", e.what());
  } catch (const NotFoundError& e) {
    return ErrorResponse(404, "not_found", e.what());
  } catch (const ConflictError& e) {
    return ErrorResponse(409, "conflict", e.what());
  } catch (const std::exception& e) {
    return ErrorResponse(500, "internal", e.what());
  }
}

WireResponse WireApi::Dispatch(const WireRequest& request) {
  const std::vector<std::string> parts = SplitPath(request.path);
  const std::string& m = request.method;
  if (parts.empty() || parts[0] != "v1") {
    return ErrorResponse(404, "not_found", "no route " + request.path);
  }
  if (parts.size() == 2 && parts[1] == "health") {
    if (m != "GET") return ErrorResponse(405, "method_not_allowed", m);
    return JsonResponse(200, Json{{"status", "ok"}});
  }
  if (parts.size() < 2 || parts[1] != "sessions") {
    return ErrorResponse(404, "not_found", "no route " + request.path);
  }
  if (parts.size() == 2) {
    if (m != "POST") return ErrorResponse(405, "method_not_allowed", m);
    const Json body = ParseBody(request.body);
    std::optional<std::uint64_t> seed;
    if (body.contains("seed") && !body["seed"].is_null()) {
      if (!body["seed"].is_number_unsigned()) {
        throw ValidationError("seed must be a non-negative integer");
      }
      seed = body["seed"].get<std::uint64_t>();
    }
    return JsonResponse(201, ToJson(service_.CreateSession(seed)));
  }
  const std::string& id = parts[2];
  if (parts.size() == 3) {
    if (m != "GET") return ErrorResponse(405, "method_not_allowed", m);
    const Session s = service_.Get(id);
    return JsonResponse(
        200, Json{{"session_id", s.id},
                  {"agent_stage", StageToString(s.state.agent_stage)},
                  {"closed", s.closed()},
                  {"created_at_ms", s.created_at_ms},
                  {"last_active_ms", s.last_active_ms},
                  {"turns", s.turn_index()},
                  {"state", ToJson(s.state)},
                  {"context", ToJson(s.context)}});
  }
  if (parts.size() == 4 && parts[3] == "turns") {
    if (m != "POST") return ErrorResponse(405, "method_not_allowed", m);
    const TurnInput input = TurnInputFromJson(ParseBody(request.body));
    return JsonResponse(200, ToJson(service_.PostTurn(id, input)));
  }
  if (parts.size() == 4 && parts[3] == "transcript") {
    if (m != "GET") return ErrorResponse(405, "method_not_allowed", m);
    std::string format = "structured";
    if (auto it = request.query.find("format"); it != request.query.end()) {
      format = it->second;
    }
    if (format == "structured") {
      return WireResponse{
          200, "application/json",
          service_.ExportTranscript(id, TranscriptFormat::kStructured)};
    }
    if (format == "text") {
      return WireResponse{200, "text/plain; charset=utf-8",
                          service_.ExportTranscript(id, TranscriptFormat::kText)};
    }
    throw ValidationError("format must be structured or text");
  }
  return ErrorResponse(404, "not_found", "no route " + request.path);
}

}  // namespace moviechat
