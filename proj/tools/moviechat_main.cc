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

// Command-line entry point: HTTP turn service or terminal REPL.

#include <csignal>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "moviechat/catalog/catalog.h"
#include "moviechat/core/errors.h"
#include "moviechat/dm/policy_config.h"
#include "moviechat/nlg/template_set.h"
#include "moviechat/nlu/pattern_registry.h"
#include "moviechat/service/engine.h"
#include "moviechat/service/http_server.h"
#include "moviechat/service/repl.h"
#include "moviechat/service/service.h"
#include "moviechat/service/session_store.h"
#include "moviechat/service/wire_api.h"

namespace {

moviechat::HttpServer* g_server = nullptr;

void OnSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

moviechat::RecapMode ParseRecap(const std::string& mode) {
  if (mode == "never") return moviechat::RecapMode::kNever;
  if (mode == "every_turn") return moviechat::RecapMode::kEveryTurn;
  return moviechat::RecapMode::kElicit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moviechat: conversational movie recommender"};
  std::string data_dir = MOVIECHAT_DEFAULT_DATA_DIR;
  std::string catalog_path;
  std::string templates_path;
  std::string patterns_path;
  std::string policy_path;
  std::optional<std::string> synonyms_path;
  std::string listen = "127.0.0.1:8080";
  std::string session_dir;
  std::optional<std::uint64_t> seed;
  bool repl = false;
  bool trace = false;
  bool show_acts = false;
  double ttl_hours = 24.0;
  std::string recap = "elicit";

  app.add_option("--data-dir", data_dir,
                 "Directory holding the default resource files")
      ->envname("MOVIECHAT_DATA_DIR");
  app.add_option("--catalog", catalog_path,
                 "Item catalog (JSON lines); default <data-dir>/catalog.jsonl")
      ->envname("MOVIECHAT_CATALOG");
  app.add_option("--templates", templates_path, "NLG template file")
      ->envname("MOVIECHAT_TEMPLATES");
  app.add_option("--patterns", patterns_path, "Intent pattern registry")
      ->envname("MOVIECHAT_PATTERNS");
  app.add_option("--policy", policy_path, "Policy configuration")
      ->envname("MOVIECHAT_POLICY");
  app.add_option("--synonyms", synonyms_path,
                 "Genre synonym table; empty to disable")
      ->envname("MOVIECHAT_SYNONYMS");
  app.add_option("--listen", listen, "HTTP listen address host:port")
      ->envname("MOVIECHAT_LISTEN");
  app.add_option("--session-dir", session_dir,
                 "Persist sessions here; in memory when empty")
      ->envname("MOVIECHAT_SESSION_DIR");
  app.add_option("--seed", seed, "Fixed seed for new sessions")
      ->envname("MOVIECHAT_SEED");
  app.add_flag("--repl", repl, "Chat in the terminal instead of serving HTTP")
      ->envname("MOVIECHAT_REPL");
  app.add_flag("--trace", trace, "Include policy rule firings in replies")
      ->envname("MOVIECHAT_TRACE");
  app.add_flag("--show-acts", show_acts, "REPL: print agent dialogue acts");
  app.add_option("--session-ttl", ttl_hours, "Idle session expiry in hours")
      ->envname("MOVIECHAT_SESSION_TTL")
      ->check(CLI::PositiveNumber);
  app.add_option("--recap", recap, "When to recap preferences")
      ->check(CLI::IsMember({"elicit", "every_turn", "never"}))
      ->envname("MOVIECHAT_RECAP");
  CLI11_PARSE(app, argc, argv);
  const std::filesystem::path data(data_dir);
  auto or_default = [&](std::string& path, const char* name) {
    if (path.empty()) path = (data / name).string();
  };
  or_default(catalog_path, "catalog.jsonl");
  or_default(templates_path, "templates.json");
  or_default(patterns_path, "patterns.json");
  or_default(policy_path, "policy.json");
  if (!synonyms_path) synonyms_path = (data / "synonyms.json").string();

  try {
    moviechat::SynonymTable synonyms;
    if (!synonyms_path->empty()) {
      synonyms = moviechat::LoadSynonymsFile(*synonyms_path);
    }
    moviechat::LoadReport report;
    const moviechat::Catalog catalog =
        moviechat::Catalog::LoadFile(catalog_path, synonyms, &report);
    std::cerr << "catalog: " << moviechat::ReportToJson(report).dump() << '\n';
    const auto patterns = moviechat::PatternRegistry::LoadFile(patterns_path);
    const auto templates = moviechat::TemplateSet::LoadFile(templates_path);

    moviechat::EngineOptions options;
    options.policy = moviechat::LoadPolicyConfigFile(policy_path);
    options.nlg.recap = ParseRecap(recap);
    options.trace = trace;
    const moviechat::Engine engine(catalog, patterns, templates, options);

    moviechat::StoreOptions store_options;
    if (!session_dir.empty()) store_options.directory = session_dir;
    store_options.ttl_ms = static_cast<std::int64_t>(ttl_hours * 3600 * 1000);
    moviechat::SessionStore store(store_options);
    moviechat::ChatService service(engine, store, seed);

    if (repl) {
      moviechat::ReplOptions repl_options;
      repl_options.seed = seed;
      repl_options.show_acts = show_acts;
      repl_options.show_trace = trace;
      moviechat::RunRepl(service, std::cin, std::cout, repl_options);
      return 0;
    }

    moviechat::WireApi api(service);
    moviechat::HttpServer server(api);
    g_server = &server;
    std::signal(SIGINT, OnSignal);
    std::signal(SIGTERM, OnSignal);
    std::cerr << "listening on " << listen << '\n';
    if (!server.Listen(listen)) {
      std::cerr << "error: cannot listen on " << listen << '\n';
      return 1;
    }
    return 0;
  } catch (const moviechat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
