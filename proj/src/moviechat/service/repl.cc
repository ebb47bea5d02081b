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

#include "moviechat/service/repl.h"

#include <cstdio>

#include "moviechat/core/errors.h"

namespace moviechat {

TurnInput ReplInput(const std::string& line,
                    const std::vector<ButtonSpec>& buttons) {
  if (!line.empty() && line.size() <= 3 &&
      line.find_first_not_of("0123456789") == std::string::npos) {
    const size_t n = std::stoul(line);
    if (n >= 1 && n <= buttons.size()) {
      const ButtonSpec& b = buttons[n - 1];
      if (b.payload) return TurnInput::Payload(*b.payload);
      return TurnInput::Command(b.command.value_or("/help"));
    }
  }
  return TurnInput::Text(line);
}

void PrintResponse(const TurnResponse& r, std::ostream& out,
                   const ReplOptions& options) {
  for (const std::string& u : r.utterances) out << "AGENT: " << u << '\n';
  if (r.recommendation) {
    const RecommendationCard& c = r.recommendation.value();
    char rating[16];
    std::snprintf(rating, sizeof(rating), "%.1f", c.rating);
    out << "  [" << c.title << " (" << c.year << "), rated " << rating
        << "]\n";
    for (const std::string& link : c.links) out << "  " << link << '\n';
  }
  if (r.recap) out << "  " << *r.recap << '\n';
  if (options.show_acts) {
    for (const DialogueAct& a : r.agent_acts) {
      out << "  act: " << ActToString(a) << '\n';
    }
  }
  if (options.show_trace) {
    for (const std::string& t : r.trace) out << "  trace: " << t << '\n';
  }
  for (size_t i = 0; i < r.buttons.size(); ++i) {
    out << "  " << (i + 1) << ") " << r.buttons[i].label << '\n';
  }
}

std::string RunRepl(ChatService& service, std::istream& in, std::ostream& out,
                    const ReplOptions& options) {
  TurnResponse last = service.CreateSession(options.seed);
  const std::string id = last.session_id;
  PrintResponse(last, out, options);
  std::string line;
  while (true) {
    out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    if (line.empty()) continue;
    try {
      last = service.PostTurn(id, ReplInput(line, last.buttons));
    } catch (const Error& e) {
      out << "error: " << e.what() << '\n';
      continue;
    }
    PrintResponse(last, out, options);
    if (last.closed) break;
  }
  return id;
}

}  // namespace moviechat
