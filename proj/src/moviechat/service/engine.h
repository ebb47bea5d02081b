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

#ifndef MOVIECHAT_SERVICE_ENGINE_H_
#define MOVIECHAT_SERVICE_ENGINE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moviechat/catalog/catalog.h"
#include "moviechat/dm/dialogue_manager.h"
#include "moviechat/nlg/generator.h"
#include "moviechat/nlg/template_set.h"
#include "moviechat/nlu/nlu.h"
#include "moviechat/service/session.h"

namespace moviechat {

inline constexpr size_t kMaxUtteranceChars = 1024;

// Exactly one of the fields is set. Free text starting with '/' is a command.
struct TurnInput {
  std::optional<std::string> utterance;
  std::optional<DialogueAct> payload;
  std::optional<std::string> command;

  static TurnInput Text(std::string text);
  static TurnInput Payload(DialogueAct act);
  static TurnInput Command(std::string command);
};

struct RecommendationCard {
  std::string item_id;
  std::string title;
  int year = 0;
  double rating = 0.0;
  std::string plot;
  std::vector<std::string> links;
  std::string cover_url;
};

struct TurnResponse {
  std::string session_id;
  std::uint64_t turn = 0;
  std::vector<std::string> utterances;
  std::vector<DialogueAct> user_acts;
  std::vector<DialogueAct> agent_acts;
  std::vector<ButtonSpec> buttons;
  AgentStage agent_stage = AgentStage::kGreeting;
  std::optional<std::string> recap;
  std::optional<RecommendationCard> recommendation;
  bool closed = false;
  // Filled only when tracing is on.
  std::vector<std::string> trace;
  std::vector<std::string> notes;
};

Json ToJson(const RecommendationCard& card);
Json ToJson(const TurnResponse& response);
TurnResponse TurnResponseFromJson(const Json& json);

struct EngineOptions {
  PolicyConfig policy;
  NluOptions nlu;
  NlgOptions nlg;
  bool trace = false;
};

// The conversation pipeline over immutable resources. All methods are pure:
// they take a session and return the next one, so callers decide about
// locking and persistence.
class Engine {
 public:
  // The referenced resources must outlive the engine.
  Engine(const Catalog& catalog, const PatternRegistry& patterns,
         const TemplateSet& templates, EngineOptions options = {});

  // New session with the Welcome turn already in its transcript.
  std::pair<Session, TurnResponse> Open(const std::string& id,
                                        std::uint64_t seed,
                                        std::int64_t now_ms) const;

  // Throws ValidationError for bad input and ConflictError for a turn on a
  // closed session (only /start, /restart and /help are accepted there).
  std::pair<Session, TurnResponse> Turn(const Session& session,
                                        const TurnInput& input,
                                        std::int64_t now_ms) const;

  // Rebuilds state and context from the recorded acts alone. Throws
  // ValidationError if the transcript is malformed or the recomputed agent
  // acts differ from the recorded ones.
  Session Replay(const Session& session) const;

  Json ExportStructured(const Session& session) const;
  std::string ExportText(const Session& session) const;

  const DialogueManager& dm() const { return dm_; }
  const Nlu& nlu() const { return nlu_; }
  const Generator& generator() const { return generator_; }
  const Catalog& catalog() const { return catalog_; }
  const EngineOptions& options() const { return options_; }

 private:
  struct Step {
    std::vector<DialogueAct> user_acts;
    TurnOutcome outcome;
    std::vector<std::string> utterances;  // fixed text, e.g. help
  };
  // Applies one user entry to state and context.
  Step Apply(const DialogueState& state, const DialogueContext& context,
             const std::optional<std::string>& command,
             const std::vector<DialogueAct>& user_acts) const;
  TurnResponse Respond(const Session& session, const Step& step,
                       std::uint64_t turn) const;

  const Catalog& catalog_;
  const TemplateSet& templates_;
  EngineOptions options_;
  Nlu nlu_;
  DialogueManager dm_;
  Generator generator_;
};

// Inverse of Engine::ExportStructured: id, seed and transcript only; state
// and context are left blank for Engine::Replay to fill.
Session SessionFromExport(const Json& json);

// Number of Unicode code points in UTF-8 text.
size_t Utf8Length(const std::string& text);

}  // namespace moviechat

#endif  // MOVIECHAT_SERVICE_ENGINE_H_
