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

#ifndef MOVIECHAT_SERVICE_REPL_H_
#define MOVIECHAT_SERVICE_REPL_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "moviechat/service/service.h"

namespace moviechat {

struct ReplOptions {
  std::optional<std::uint64_t> seed;
  bool show_acts = false;  // print agent acts after each reply
  bool show_trace = false;
};

// Line-oriented front end over the same service the HTTP API uses. A line
// holding just the number of a listed option clicks that button. Returns the
// id of the session it drove.
std::string RunRepl(ChatService& service, std::istream& in, std::ostream& out,
                    const ReplOptions& options = {});

// Maps a REPL line to a turn input given the options on screen.
TurnInput ReplInput(const std::string& line,
                    const std::vector<ButtonSpec>& buttons);

// Prints one response: utterances, recap, card and numbered options.
void PrintResponse(const TurnResponse& response, std::ostream& out,
                   const ReplOptions& options = {});

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_REPL_H_
