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

#include "moviechat/service/engine.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

bool IsCommand(const std::string& text) {
  return !text.empty() && text.front() == '/';
}

std::string NormalizeCommand(std::string text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return text;
}

std::int64_t NextTimestamp(const Session& session, std::int64_t now_ms) {
  if (session.transcript.empty()) return now_ms;
  return std::max(now_ms, session.transcript.back().timestamp_ms + 1);
}

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace

TurnInput TurnInput::Text(std::string text) {
  TurnInput input;
  input.utterance = std::move(text);
  return input;
}

TurnInput TurnInput::Payload(DialogueAct act) {
  TurnInput input;
  input.payload = std::move(act);
  return input;
}

TurnInput TurnInput::Command(std::string command) {
  TurnInput input;
  input.command = std::move(command);
  return input;
}

size_t Utf8Length(const std::string& text) {
  size_t n = 0;
  for (unsigned char c : text) n += (c & 0xC0) != 0x80;
  return n;
}

Json ToJson(const RecommendationCard& card) {
  return Json{{"item_id", card.item_id}, {"title", card.title},
              {"year", card.year},       {"rating", card.rating},
              {"plot", card.plot},       {"links", card.links},
              {"cover_url", card.cover_url}};
}

Json ToJson(const TurnResponse& r) {
  Json buttons = Json::array();
  for (const ButtonSpec& b : r.buttons) buttons.push_back(ToJson(b));
  Json json{{"session_id", r.session_id},
            {"turn", r.turn},
            {"utterances", r.utterances},
            {"user_acts", ActsToJson(r.user_acts)},
            {"agent_acts", ActsToJson(r.agent_acts)},
            {"buttons", buttons},
            {"agent_stage", StageToString(r.agent_stage)},
            {"recap", r.recap ? Json(*r.recap) : Json(nullptr)},
            {"recommendation",
             r.recommendation ? ToJson(*r.recommendation) : Json(nullptr)},
            {"closed", r.closed}};
  if (!r.trace.empty()) json["trace"] = r.trace;
  if (!r.notes.empty()) json["notes"] = r.notes;
  return json;
}

TurnResponse TurnResponseFromJson(const Json& json) {
  try {
    TurnResponse r;
    r.session_id = json.at("session_id").get<std::string>();
    r.turn = json.at("turn").get<std::uint64_t>();
    r.utterances = json.at("utterances").get<std::vector<std::string>>();
    r.user_acts = ActsFromJson(json.at("user_acts"));
    r.agent_acts = ActsFromJson(json.at("agent_acts"));
    for (const Json& b : json.at("buttons")) r.buttons.push_back(ButtonFromJson(b));
    r.agent_stage = ParseStage(json.at("agent_stage").get<std::string>());
    if (!json.at("recap").is_null()) r.recap = json["recap"].get<std::string>();
    const Json& card = json.at("recommendation");
    if (!card.is_null()) {
      RecommendationCard c;
      c.item_id = card.at("item_id").get<std::string>();
      c.title = card.at("title").get<std::string>();
      c.year = card.at("year").get<int>();
      c.rating = card.at("rating").get<double>();
      c.plot = card.at("plot").get<std::string>();
      c.links = card.at("links").get<std::vector<std::string>>();
      c.cover_url = card.at("cover_url").get<std::string>();
      r.recommendation = c;
    }
    r.closed = json.at("closed").get<bool>();
    if (json.contains("trace")) {
      r.trace = json["trace"].get<std::vector<std::string>>();
    }
    if (json.contains("notes")) {
      r.notes = json["notes"].get<std::vector<std::string>>();
    }
    return r;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("turn response: ") + e.what());
  }
}

Engine::Engine(const Catalog& catalog, const PatternRegistry& patterns,
               const TemplateSet& templates, EngineOptions options)
    : catalog_(catalog),
      templates_(templates),
      options_(options),
      nlu_(catalog, patterns, options.nlu),
      dm_(catalog, options.policy),
      generator_(templates, &catalog, options.nlg) {
  dm_.set_trace(options.trace);
}

Engine::Step Engine::Apply(const DialogueState& state,
                           const DialogueContext& context,
                           const std::optional<std::string>& command,
                           const std::vector<DialogueAct>& user_acts) const {
  Step step;
  step.user_acts = user_acts;
  if (command == "/help") {
    step.outcome.new_state = state;
    step.outcome.new_context = context;
    step.utterances.push_back(templates_.Phrase("help"));
    return step;
  }
  if (command == "/restart" || command == "/start") {
    DialogueState blank = Restart(state);
    dm_.RefreshMatches(blank);
    if (command == "/start") {
      step.outcome = dm_.Start(blank, DialogueContext{});
    } else {
      step.outcome.new_state = std::move(blank);
      step.utterances.push_back(templates_.Phrase("restart"));
    }
    return step;
  }
  // Anything else, including /exit, goes through the dialogue manager with
  // the acts it stands for.
  step.outcome = dm_.UpdateState(state, context, user_acts);
  return step;
}

TurnResponse Engine::Respond(const Session& session, const Step& step,
                             std::uint64_t turn) const {
  TurnResponse r;
  r.session_id = session.id;
  r.turn = turn;
  r.user_acts = step.user_acts;
  r.agent_acts = step.outcome.agent_acts;
  r.utterances = step.utterances;
  const DialogueState& state = step.outcome.new_state;
  for (size_t i = 0; i < r.agent_acts.size(); ++i) {
    r.utterances.push_back(generator_.Render(
        r.agent_acts[i], state, MixSeed(session.rng_seed, turn, i)));
  }
  if (r.utterances.empty()) {
    // Keep every response speaking even if the policy stayed silent.
    r.utterances.push_back(generator_.Render(
        AgentAct(Intent::kCantHelp), state, MixSeed(session.rng_seed, turn, 0)));
  }
  r.agent_stage = state.agent_stage;
  if (generator_.WantsRecap(r.agent_acts)) {
    r.recap = generator_.SummarizeIn(state.info_need);
  }
  for (const DialogueAct& act : r.agent_acts) {
    if (act.intent != Intent::kRecommend || !act.item) continue;
    if (const Item* item = catalog_.Find(*act.item)) {
      RecommendationCard card;
      card.item_id = item->id;
      card.title = item->title;
      card.year = item->release_year;
      card.rating = item->rating;
      card.plot = item->plot;
      if (!item->item_url.empty()) card.links.push_back(item->item_url);
      card.cover_url = item->cover_url;
      r.recommendation = card;
    }
  }
  r.buttons = generator_.OptionsFor(state, step.outcome.new_context);
  r.closed = state.agent_stage == AgentStage::kClosing;
  r.trace = step.outcome.trace;
  r.notes = step.outcome.notes;
  return r;
}

std::pair<Session, TurnResponse> Engine::Open(const std::string& id,
                                              std::uint64_t seed,
                                              std::int64_t now_ms) const {
  Session session;
  session.id = id;
  session.rng_seed = seed;
  session.created_at_ms = now_ms;
  session.last_active_ms = now_ms;
  session.state.session_id = id;
  Step step;
  step.outcome = dm_.Start(session.state, session.context);
  TurnResponse response = Respond(session, step, 0);
  session.state = step.outcome.new_state;
  session.context = step.outcome.new_context;
  session.transcript.push_back(TranscriptEntry{
      now_ms, Author::kAgent, Join(response.utterances), std::nullopt,
      std::nullopt, response.agent_acts});
  return {std::move(session), std::move(response)};
}

std::pair<Session, TurnResponse> Engine::Turn(const Session& session,
                                              const TurnInput& input,
                                              std::int64_t now_ms) const {
  const int given = input.utterance.has_value() + input.payload.has_value() +
                    input.command.has_value();
  if (given != 1) {
    throw ValidationError("a turn needs exactly one of utterance, payload "
                          "or command");
  }
  TranscriptEntry user;
  user.author = Author::kUser;
  std::optional<std::string> command = input.command;
  if (input.utterance) {
    if (Utf8Length(*input.utterance) > kMaxUtteranceChars) {
      throw ValidationError("utterance longer than " +
                            std::to_string(kMaxUtteranceChars) +
                            " characters");
    }
    user.text = *input.utterance;
    if (IsCommand(*input.utterance)) command = *input.utterance;
  }
  if (command) {
    command = NormalizeCommand(*command);
    if (*command != "/start" && *command != "/restart" &&
        *command != "/exit") {
      command = "/help";
    }
    if (user.text.empty()) user.text = *command;
    user.command = command;
  }
  if (session.closed() && command != "/start" && command != "/restart" &&
      command != "/help") {
    throw ConflictError("session " + session.id + " is closed");
  }

  std::vector<DialogueAct> user_acts;
  if (input.payload) {
    DialogueAct act = *input.payload;
    if (act.author != Author::kUser || !IsUserIntent(act.intent)) {
      throw ValidationError("payload must be a user act");
    }
    for (Constraint& c : act.constraints) {
      c = MakeConstraint(c.slot, c.op, c.value);
    }
    ValidateAct(act);
    user.payload = act;
    user.text = ActToString(act);
    user_acts.push_back(std::move(act));
  } else if (command == "/exit") {
    user_acts.push_back(UserAct(Intent::kBye));
  } else if (!command) {
    user_acts = nlu_.Parse(*input.utterance, session.state);
  }

  const Step step = Apply(session.state, session.context, command, user_acts);
  Session next = session;
  const std::uint64_t turn = session.turn_index() + 1;
  TurnResponse response = Respond(session, step, turn);
  user.timestamp_ms = NextTimestamp(session, now_ms);
  user.acts = step.user_acts;
  next.transcript.push_back(user);
  next.transcript.push_back(TranscriptEntry{
      user.timestamp_ms + 1, Author::kAgent, Join(response.utterances),
      std::nullopt, std::nullopt, response.agent_acts});
  next.state = step.outcome.new_state;
  next.context = step.outcome.new_context;
  next.last_active_ms = std::max(now_ms, session.last_active_ms);
  return {std::move(next), std::move(response)};
}

Session Engine::Replay(const Session& session) const {
  const auto& t = session.transcript;
  if (t.empty() || t.front().author != Author::kAgent) {
    throw ValidationError("transcript must open with the agent welcome");
  }
  DialogueState blank;
  blank.session_id = session.id;
  TurnOutcome open = dm_.Start(blank, DialogueContext{});
  if (open.agent_acts != t.front().acts) {
    throw ValidationError("replay: opening acts differ");
  }
  Session out = session;
  out.state = open.new_state;
  out.context = open.new_context;
  for (size_t i = 1; i < t.size(); ++i) {
    if (t[i].author != Author::kUser) {
      throw ValidationError("replay: expected a user line at " +
                            std::to_string(i));
    }
    if (i + 1 >= t.size() || t[i + 1].author != Author::kAgent) {
      throw ValidationError("replay: user line " + std::to_string(i) +
                            " has no agent reply");
    }
    const Step step = Apply(out.state, out.context, t[i].command, t[i].acts);
    if (step.outcome.agent_acts != t[i + 1].acts) {
      throw ValidationError("replay: agent acts differ at line " +
                            std::to_string(i + 1));
    }
    out.state = step.outcome.new_state;
    out.context = step.outcome.new_context;
    ++i;
  }
  return out;
}

Json Engine::ExportStructured(const Session& session) const {
  Json lines = Json::array();
  for (const TranscriptEntry& e : session.transcript) lines.push_back(ToJson(e));
  return Json{{"session_id", session.id},
              {"rng_seed", session.rng_seed},
              {"created_at_ms", session.created_at_ms},
              {"transcript", lines}};
}

Session SessionFromExport(const Json& json) {
  try {
    Session session;
    session.id = json.at("session_id").get<std::string>();
    session.rng_seed = json.at("rng_seed").get<std::uint64_t>();
    session.created_at_ms = json.at("created_at_ms").get<std::int64_t>();
    session.state.session_id = session.id;
    for (const Json& line : json.at("transcript")) {
      session.transcript.push_back(TranscriptEntryFromJson(line));
    }
    if (!session.transcript.empty()) {
      session.last_active_ms = session.transcript.back().timestamp_ms;
    }
    return session;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("transcript export: ") + e.what());
  }
}

std::string Engine::ExportText(const Session& session) const {
  std::ostringstream out;
  for (const TranscriptEntry& e : session.transcript) {
    const char* who = e.author == Author::kUser ? "USER" : "AGENT";
    std::istringstream lines(e.text);
    std::string line;
    bool any = false;
    while (std::getline(lines, line)) {
      out << who << ": " << line << '\n';
      any = true;
    }
    if (!any) out << who << ":\n";
  }
  return out.str();
}

}  // namespace moviechat
