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

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "moviechat/core/errors.h"
#include "moviechat/service/engine.h"
#include "moviechat/service/http_server.h"
#include "moviechat/service/repl.h"
#include "moviechat/service/service.h"
#include "moviechat/service/session_store.h"
#include "moviechat/service/wire_api.h"
#include "support/test_env.h"

namespace moviechat {
namespace {

namespace fs = std::filesystem;

const Engine& TheEngine() {
  static const Engine engine = [] {
    EngineOptions options;
    options.policy = testenv::Policy();
    return Engine(testenv::BundledCatalog(), testenv::Patterns(),
                  testenv::Templates(), options);
  }();
  return engine;
}

std::vector<Intent> Intents(const std::vector<DialogueAct>& acts) {
  std::vector<Intent> out;
  for (const auto& a : acts) out.push_back(a.intent);
  return out;
}

bool HasIntent(const TurnResponse& r, Intent intent) {
  for (const auto& a : r.agent_acts) {
    if (a.intent == intent) return true;
  }
  return false;
}

// Drives a session to a recommendation with the scripted path.
Session Recommended(std::uint64_t seed = 7) {
  const Engine& e = TheEngine();
  Session s = e.Open("s1", seed, 1000).first;
  for (const char* text :
       {"hi", "drama", "I don't care", "Morgan Freeman"}) {
    s = e.Turn(s, TurnInput::Text(text), 2000).first;
  }
  return s;
}

TEST(EngineTest, OpenWelcomes) {
  const auto [session, response] = TheEngine().Open("abc", 7, 1000);
  EXPECT_EQ(response.session_id, "abc");
  EXPECT_EQ(Intents(response.agent_acts), std::vector<Intent>{Intent::kWelcome});
  EXPECT_EQ(response.turn, 0u);
  ASSERT_EQ(session.transcript.size(), 1u);
  EXPECT_EQ(session.transcript[0].author, Author::kAgent);
  EXPECT_EQ(session.transcript[0].text, response.utterances[0]);
  EXPECT_FALSE(response.closed);
}

TEST(EngineTest, ScriptedPathReachesRecommendation) {
  const Session s = Recommended();
  EXPECT_EQ(s.state.agent_stage, AgentStage::kRecommending);
  ASSERT_TRUE(s.state.current_recommendation.has_value());
  EXPECT_EQ(s.turn_index(), 4u);
  // Agent entry follows each user entry.
  ASSERT_EQ(s.transcript.size(), 9u);
  for (size_t i = 1; i < s.transcript.size(); i += 2) {
    EXPECT_EQ(s.transcript[i].author, Author::kUser);
    EXPECT_EQ(s.transcript[i + 1].author, Author::kAgent);
  }
  for (size_t i = 1; i < s.transcript.size(); ++i) {
    EXPECT_GT(s.transcript[i].timestamp_ms, s.transcript[i - 1].timestamp_ms);
  }
}

TEST(EngineTest, RecommendationCard) {
  const Engine& e = TheEngine();
  Session s = e.Open("s1", 7, 1000).first;
  for (const char* text : {"hi", "drama", "I don't care"}) {
    s = e.Turn(s, TurnInput::Text(text), 2000).first;
  }
  const auto [next, r] = e.Turn(s, TurnInput::Text("Morgan Freeman"), 3000);
  ASSERT_TRUE(r.recommendation.has_value());
  const Item& item = e.catalog().Get(r.recommendation->item_id);
  EXPECT_EQ(r.recommendation->title, item.title);
  EXPECT_EQ(r.recommendation->year, item.release_year);
  EXPECT_EQ(r.recommendation->item_id, *next.state.current_recommendation);
  EXPECT_FALSE(r.buttons.empty());
}

TEST(EngineTest, SameSeedSameBytes) {
  const Session a = Recommended(11);
  const Session b = Recommended(11);
  EXPECT_EQ(TheEngine().ExportText(a), TheEngine().ExportText(b));
  EXPECT_EQ(TheEngine().ExportStructured(a).dump(),
            TheEngine().ExportStructured(b).dump());
}

TEST(EngineTest, PayloadBypassesNlu) {
  const Engine& e = TheEngine();
  Session s = e.Open("s1", 7, 1000).first;
  const DialogueAct reveal = UserAct(
      Intent::kReveal,
      {MakeConstraint(SlotName::kGenres, Operator::kEq, "comedy")});
  const auto [next, r] = e.Turn(s, TurnInput::Payload(reveal), 2000);
  EXPECT_EQ(r.user_acts, std::vector<DialogueAct>{reveal});
  EXPECT_TRUE(next.state.info_need.HasConstraints(SlotName::kGenres));
  ASSERT_TRUE(next.transcript[1].payload.has_value());
}

TEST(EngineTest, Commands) {
  const Engine& e = TheEngine();
  Session s = Recommended();
  const auto help = e.Turn(s, TurnInput::Command("/help"), 5000);
  EXPECT_EQ(help.first.state.info_need, s.state.info_need);
  EXPECT_EQ(help.second.utterances,
            std::vector<std::string>{testenv::Templates().Phrase("help")});
  // Unknown commands behave like /help.
  const auto unknown = e.Turn(s, TurnInput::Text("/frobnicate"), 5000);
  EXPECT_EQ(unknown.second.utterances, help.second.utterances);

  const auto restart = e.Turn(s, TurnInput::Command("/restart"), 5000);
  EXPECT_TRUE(restart.first.state.info_need.empty());
  EXPECT_TRUE(restart.first.context.empty());
  EXPECT_EQ(restart.first.state.agent_stage, AgentStage::kGreeting);
  EXPECT_EQ(restart.second.utterances[0],
            testenv::Templates().Phrase("restart"));

  const auto start = e.Turn(s, TurnInput::Command("/start"), 5000);
  EXPECT_TRUE(HasIntent(start.second, Intent::kWelcome));
  EXPECT_TRUE(start.first.context.empty());

  const auto exit = e.Turn(s, TurnInput::Command("/exit"), 5000);
  EXPECT_EQ(Intents(exit.second.user_acts), std::vector<Intent>{Intent::kBye});
  EXPECT_TRUE(exit.second.closed);
  EXPECT_TRUE(exit.first.closed());
}

TEST(EngineTest, ClosedSessionAcceptsOnlyRestartCommands) {
  const Engine& e = TheEngine();
  const Session closed =
      e.Turn(Recommended(), TurnInput::Text("bye"), 5000).first;
  ASSERT_TRUE(closed.closed());
  EXPECT_THROW(e.Turn(closed, TurnInput::Text("drama"), 6000), ConflictError);
  EXPECT_THROW(e.Turn(closed, TurnInput::Command("/exit"), 6000),
               ConflictError);
  EXPECT_NO_THROW(e.Turn(closed, TurnInput::Command("/help"), 6000));
  const auto reopened = e.Turn(closed, TurnInput::Command("/restart"), 6000);
  EXPECT_FALSE(reopened.first.closed());
}

TEST(EngineTest, UtteranceLimitCountsCodePoints) {
  const Engine& e = TheEngine();
  const Session s = e.Open("s1", 7, 1000).first;
  std::string ok;
  for (size_t i = 0; i < kMaxUtteranceChars; ++i) ok += "\xc3\xa9";  // é
  EXPECT_EQ(Utf8Length(ok), kMaxUtteranceChars);
  EXPECT_NO_THROW(e.Turn(s, TurnInput::Text(ok), 2000));
  EXPECT_THROW(e.Turn(s, TurnInput::Text(ok + "x"), 2000), ValidationError);
}

TEST(EngineTest, ReplayReproducesState) {
  const Engine& e = TheEngine();
  Session s = Recommended();
  for (const char* text : {"tell me more", "who directed it", "yes",
                           "something similar", "bye"}) {
    s = e.Turn(s, TurnInput::Text(text), 9000).first;
  }
  const Session replayed = e.Replay(s);
  EXPECT_EQ(replayed.state, s.state);
  EXPECT_EQ(replayed.context, s.context);
  // A tampered agent entry is detected.
  Session tampered = s;
  tampered.transcript[2].acts = {AgentAct(Intent::kBye)};
  EXPECT_THROW(e.Replay(tampered), ValidationError);
}

TEST(EngineTest, ExportRoundTrip) {
  const Engine& e = TheEngine();
  const Session s = Recommended();
  const Json exported = e.ExportStructured(s);
  const Session back = SessionFromExport(exported);
  EXPECT_EQ(back.id, s.id);
  EXPECT_EQ(back.transcript, s.transcript);
  EXPECT_EQ(e.Replay(back).state, s.state);
  const std::string text = e.ExportText(s);
  EXPECT_EQ(text.rfind("AGENT: ", 0), 0u);
  EXPECT_NE(text.find("\nUSER: hi\n"), std::string::npos) << text;
}

TEST(EngineTest, TurnResponseJsonRoundTrip) {
  const Engine& e = TheEngine();
  Session s = e.Open("s1", 7, 1000).first;
  for (const char* text : {"hi", "drama", "I don't care"}) {
    s = e.Turn(s, TurnInput::Text(text), 2000).first;
  }
  const TurnResponse r =
      e.Turn(s, TurnInput::Text("Morgan Freeman"), 3000).second;
  const Json j = ToJson(r);
  for (const char* key :
       {"session_id", "turn", "utterances", "user_acts", "agent_acts",
        "buttons", "agent_stage", "recap", "recommendation", "closed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  const TurnResponse back = TurnResponseFromJson(j);
  EXPECT_EQ(ToJson(back).dump(), j.dump());
}

TEST(SessionTest, SnapshotRoundTrip) {
  const Session s = Recommended();
  Session back;
  const size_t length = SnapshotFromJson(SnapshotToJson(s), &back);
  EXPECT_EQ(length, s.transcript.size());
  EXPECT_EQ(back.state, s.state);
  EXPECT_EQ(back.context, s.context);
  EXPECT_EQ(back.rng_seed, s.rng_seed);
  EXPECT_TRUE(back.transcript.empty());
}

TEST(SessionTest, NewIdsAreValidAndDistinct) {
  std::set<std::string> ids;
  for (int i = 0; i < 100; ++i) {
    const std::string id = NewSessionId();
    EXPECT_TRUE(SessionStore::ValidId(id)) << id;
    ids.insert(id);
  }
  EXPECT_EQ(ids.size(), 100u);
  EXPECT_FALSE(SessionStore::ValidId(""));
  EXPECT_FALSE(SessionStore::ValidId("../etc"));
  EXPECT_FALSE(SessionStore::ValidId(std::string(65, 'a')));
}

TEST(StoreTest, PersistsAndRecovers) {
  const fs::path dir = testenv::TempDir("store");
  const Engine& e = TheEngine();
  Session committed;
  {
    SessionStore store(StoreOptions{dir});
    store.Create(e.Open("p1", 3, NowMs()).first);
    EXPECT_THROW(store.Create(e.Open("p1", 3, NowMs()).first), ConflictError);
    for (const char* text : {"hi", "comedy"}) {
      SessionStore::Lease lease = store.Acquire("p1");
      Session next = e.Turn(lease.session(), TurnInput::Text(text), NowMs())
                         .first;
      store.Commit(lease, next);
      committed = next;
    }
  }
  EXPECT_TRUE(fs::exists(dir / "p1.json"));
  EXPECT_TRUE(fs::exists(dir / "p1.jsonl"));
  const Session recovered = SessionStore::Recover(dir, "p1");
  EXPECT_EQ(recovered.state, committed.state);
  EXPECT_EQ(recovered.transcript, committed.transcript);
  // A fresh store finds it on disk.
  SessionStore again(StoreOptions{dir});
  EXPECT_TRUE(again.Contains("p1"));
  EXPECT_EQ(again.Acquire("p1").session().state, committed.state);
  EXPECT_THROW(SessionStore::Recover(dir, "missing"), NotFoundError);
}

TEST(StoreTest, RecoveryDropsUncommittedAndTornLines) {
  const fs::path dir = testenv::TempDir("torn");
  const Engine& e = TheEngine();
  Session s = e.Open("t1", 3, NowMs()).first;
  {
    SessionStore store(StoreOptions{dir});
    store.Create(s);
    SessionStore::Lease lease = store.Acquire("t1");
    s = e.Turn(lease.session(), TurnInput::Text("hi"), NowMs()).first;
    store.Commit(lease, s);
  }
  const auto size = fs::file_size(dir / "t1.jsonl");
  {
    // A turn appended whose snapshot never landed, then a torn line.
    std::ofstream log(dir / "t1.jsonl", std::ios::app);
    log << ToJson(s.transcript.back()).dump() << "\n";
    log << "{\"timestamp_ms\": 12";
  }
  const Session recovered = SessionStore::Recover(dir, "t1");
  EXPECT_EQ(recovered.transcript, s.transcript);
  EXPECT_EQ(fs::file_size(dir / "t1.jsonl"), size);
  EXPECT_EQ(TheEngine().Replay(recovered).state, s.state);
}

TEST(StoreTest, ExpiryAndSweep) {
  const fs::path dir = testenv::TempDir("expiry");
  SessionStore store(StoreOptions{dir, 1000});
  Session old = TheEngine().Open("old", 1, NowMs() - 5000).first;
  Session fresh = TheEngine().Open("fresh", 1, NowMs()).first;
  store.Create(old);
  store.Create(fresh);
  EXPECT_THROW(store.Acquire("old"), NotFoundError);
  EXPECT_FALSE(fs::exists(dir / "old.json"));
  EXPECT_EQ(store.Sweep(NowMs()), 0u);
  EXPECT_EQ(store.Sweep(NowMs() + 10000), 1u);
  EXPECT_FALSE(store.Contains("fresh"));
  EXPECT_TRUE(store.Ids().empty());
}

TEST(StoreTest, TurnsOnOneSessionAreSerializedInArrivalOrder) {
  SessionStore store;
  store.Create(TheEngine().Open("q", 1, NowMs()).first);
  std::vector<int> order;
  std::atomic<int> arrived{0};
  std::vector<std::thread> threads;
  {
    SessionStore::Lease first = store.Acquire("q");
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back([&, i] {
        // Arrive one at a time so arrival order is known.
        while (arrived.load() != i) std::this_thread::yield();
        ++arrived;
        SessionStore::Lease lease = store.Acquire("q");
        order.push_back(i);
      });
      while (arrived.load() <= i) std::this_thread::yield();
      // Give the thread time to take its ticket.
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(order, (std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(ServiceTest, ParallelTurnsOnOneSessionAllLand) {
  SessionStore store;
  ChatService service(TheEngine(), store, 5);
  const std::string id = service.CreateSession().session_id;
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back(
        [&] { service.PostTurn(id, TurnInput::Command("/help")); });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(service.Get(id).turn_index(), 8u);
  EXPECT_EQ(service.Get(id).transcript.size(), 17u);
}

WireResponse Call(WireApi& api, const std::string& method,
                  const std::string& path, const std::string& body = "",
                  std::map<std::string, std::string> query = {}) {
  return api.Handle(WireRequest{method, path, std::move(query), body});
}

std::string ErrorCode(const WireResponse& r) {
  return Json::parse(r.body)["error"]["code"].get<std::string>();
}

TEST(WireApiTest, Routes) {
  SessionStore store;
  ChatService service(TheEngine(), store);
  WireApi api(service);

  WireResponse r = Call(api, "GET", "/v1/health");
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(Json::parse(r.body)["status"], "ok");

  r = Call(api, "POST", "/v1/sessions", R"({"seed": 7})");
  ASSERT_EQ(r.status, 201);
  const Json created = Json::parse(r.body);
  const std::string id = created["session_id"];
  EXPECT_EQ(created["agent_acts"][0]["intent"], "Welcome");

  r = Call(api, "POST", "/v1/sessions/" + id + "/turns",
           R"({"utterance": "hi"})");
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_EQ(Json::parse(r.body)["agent_stage"], "eliciting");

  r = Call(api, "POST", "/v1/sessions/" + id + "/turns",
           R"({"payload": {"intent": "Reveal", "author": "user",
               "constraints": [{"slot": "genres", "op": "=",
                                "value": "comedy"}]}})");
  ASSERT_EQ(r.status, 200) << r.body;

  r = Call(api, "GET", "/v1/sessions/" + id);
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(Json::parse(r.body)["turns"], 2);

  r = Call(api, "GET", "/v1/sessions/" + id + "/transcript", "",
           {{"format", "text"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type.rfind("text/plain", 0), 0u);
  EXPECT_NE(r.body.find("USER: hi"), std::string::npos);

  r = Call(api, "GET", "/v1/sessions/" + id + "/transcript");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(Json::parse(r.body)["transcript"].size(), 5u);

  r = Call(api, "POST", "/v1/sessions/" + id + "/turns",
           R"({"payload": {"command": "/exit"}})");
  ASSERT_EQ(r.status, 200);
  EXPECT_TRUE(Json::parse(r.body)["closed"].get<bool>());
}

TEST(WireApiTest, ErrorStatuses) {
  SessionStore store;
  ChatService service(TheEngine(), store);
  WireApi api(service);
  const std::string id =
      Json::parse(Call(api, "POST", "/v1/sessions", "{}").body)["session_id"];
  const std::string turns = "/v1/sessions/" + id + "/turns";

  WireResponse r = Call(api, "POST", turns, "not json");
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(ErrorCode(r), "invalid_request");
  EXPECT_EQ(Call(api, "POST", turns, "{}").status, 400);
  EXPECT_EQ(Call(api, "POST", turns,
                 R"({"utterance": "hi", "payload": {"command": "/help"}})")
                .status,
            400);
  EXPECT_EQ(Call(api, "POST", turns,
                 R"({"payload": {"intent": "Recommend", "author": "agent"}})")
                .status,
            400);
  EXPECT_EQ(Call(api, "POST", turns,
                 Json{{"utterance", std::string(1025, 'a')}}.dump())
                .status,
            400);
  EXPECT_EQ(Call(api, "POST", "/v1/sessions", R"({"seed": -1})").status, 400);
  EXPECT_EQ(Call(api, "GET", "/v1/sessions/" + id + "/transcript", "",
                 {{"format", "xml"}})
                .status,
            400);

  r = Call(api, "POST", "/v1/sessions/nope/turns", R"({"utterance": "hi"})");
  EXPECT_EQ(r.status, 404);
  EXPECT_EQ(ErrorCode(r), "not_found");
  EXPECT_EQ(Call(api, "GET", "/v2/health").status, 404);
  EXPECT_EQ(Call(api, "GET", "/v1/sessions/../x").status, 404);

  r = Call(api, "DELETE", "/v1/sessions/" + id);
  EXPECT_EQ(r.status, 405);
  EXPECT_EQ(Call(api, "GET", turns).status, 405);

  Call(api, "POST", turns, R"({"utterance": "bye"})");
  r = Call(api, "POST", turns, R"({"utterance": "drama"})");
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(ErrorCode(r), "conflict");
}

// The REPL and the wire API produce the same acts for the same input.
TEST(FrontEndTest, ReplAndWireAgree) {
  const std::vector<std::string> lines = {"hi", "drama", "I don't care",
                                          "Morgan Freeman", "1", "bye"};
  SessionStore repl_store;
  ChatService repl_service(TheEngine(), repl_store);
  std::istringstream in([&] {
    std::string s;
    for (const auto& l : lines) s += l + "\n";
    return s;
  }());
  std::ostringstream out;
  ReplOptions options;
  options.seed = 9;
  const std::string repl_id = RunRepl(repl_service, in, out, options);
  const Session repl_session = repl_service.Get(repl_id);

  SessionStore wire_store;
  ChatService wire_service(TheEngine(), wire_store);
  WireApi api(wire_service);
  const Json created = Json::parse(
      Call(api, "POST", "/v1/sessions", R"({"seed": 9})").body);
  const std::string id = created["session_id"];
  Json last = created;
  for (const std::string& line : lines) {
    Json body;
    if (line == "1") {
      body["payload"] = last["buttons"][0]["payload"];
    } else {
      body["utterance"] = line;
    }
    const WireResponse r =
        Call(api, "POST", "/v1/sessions/" + id + "/turns", body.dump());
    ASSERT_EQ(r.status, 200) << r.body;
    last = Json::parse(r.body);
  }
  const Session wire_session = wire_service.Get(id);
  ASSERT_EQ(repl_session.transcript.size(), wire_session.transcript.size());
  for (size_t i = 0; i < wire_session.transcript.size(); ++i) {
    EXPECT_EQ(repl_session.transcript[i].acts, wire_session.transcript[i].acts)
        << i;
    EXPECT_EQ(repl_session.transcript[i].text, wire_session.transcript[i].text)
        << i;
  }
  EXPECT_NE(out.str().find("AGENT: "), std::string::npos);
}

TEST(ReplTest, NumbersPickButtons) {
  const std::vector<ButtonSpec> buttons = {
      {"Restart", {}, "/restart"}, {"Quit", UserAct(Intent::kBye), {}}};
  EXPECT_EQ(ReplInput("1", buttons).command, "/restart");
  EXPECT_EQ(ReplInput("2", buttons).payload, UserAct(Intent::kBye));
  EXPECT_EQ(ReplInput("3", buttons).utterance, "3");
  EXPECT_EQ(ReplInput("hello", buttons).utterance, "hello");
  // Slash text goes through as typed; the engine reads it as a command.
  const TurnInput exit = ReplInput("/exit", buttons);
  EXPECT_EQ(exit.utterance, "/exit");
  const Session s = TheEngine().Open("r", 1, 1000).first;
  EXPECT_TRUE(TheEngine().Turn(s, exit, 2000).first.closed());
}

TEST(HttpServerTest, ParseListenAddress) {
  EXPECT_EQ(ParseListenAddress("127.0.0.1:8080"),
            (std::pair<std::string, int>{"127.0.0.1", 8080}));
  EXPECT_EQ(ParseListenAddress(":9000"),
            (std::pair<std::string, int>{"0.0.0.0", 9000}));
  EXPECT_THROW(ParseListenAddress("localhost"), ValidationError);
  EXPECT_THROW(ParseListenAddress("host:99999"), ValidationError);
}

TEST(HttpServerTest, RoundTripOverSocket) {
  SessionStore store;
  ChatService service(TheEngine(), store);
  WireApi api(service);
  HttpServer server(api);
  const int port = server.BindAny("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread runner([&] { server.Run(); });

  httplib::Client client("127.0.0.1", port);
  auto health = client.Get("/v1/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
  auto created = client.Post("/v1/sessions", R"({"seed": 3})",
                             "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  const std::string id = Json::parse(created->body)["session_id"];
  auto turn = client.Post("/v1/sessions/" + id + "/turns",
                          R"({"utterance": "hi"})", "application/json");
  ASSERT_TRUE(turn);
  EXPECT_EQ(turn->status, 200);
  EXPECT_EQ(Json::parse(turn->body)["agent_stage"], "eliciting");
  auto text = client.Get("/v1/sessions/" + id + "/transcript?format=text");
  ASSERT_TRUE(text);
  EXPECT_NE(text->body.find("USER: hi"), std::string::npos);
  auto missing = client.Get("/v1/sessions/zzz");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  server.Stop();
  runner.join();
}

}  // namespace
}  // namespace moviechat
