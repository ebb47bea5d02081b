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

#include "support/simulator.h"

#include <algorithm>
#include <sstream>

#include "moviechat/core/errors.h"
#include "moviechat/dm/flow.h"
#include "support/oracle.h"

namespace sim {

using namespace moviechat;

void Stats::Merge(const Stats& o) {
  conversations += o.conversations;
  turns += o.turns;
  recommends += o.recommends;
  too_many += o.too_many;
  no_results += o.no_results;
  for (const auto& [edge, n] : o.transitions) transitions[edge] += n;
  violations.insert(violations.end(), o.violations.begin(),
                    o.violations.end());
}

namespace {

template <typename T>
const T& Pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Chance(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0, 1)(rng) < p;
}

}  // namespace

Simulator::Simulator(const Engine& engine, double text_share,
                     int max_random_turns)
    : engine_(engine),
      text_share_(text_share),
      max_random_turns_(max_random_turns) {
  const Catalog& c = engine.catalog();
  auto copy = [&](SlotName slot, std::vector<std::string>* out) {
    const auto& lex = c.Lexicon(slot);
    out->assign(lex.begin(), lex.end());
  };
  copy(SlotName::kGenres, &genres_);
  copy(SlotName::kKeywords, &keywords_);
  copy(SlotName::kActors, &actors_);
  copy(SlotName::kDirectors, &directors_);
  copy(SlotName::kTitle, &titles_);
}

Constraint Simulator::RandomConstraint(std::mt19937_64& rng) {
  const int kind = Uniform(rng, 0, 9);
  const Operator eq = Chance(rng, 0.15) ? Operator::kNeq : Operator::kEq;
  switch (kind) {
    case 0:
    case 1:
      return MakeConstraint(SlotName::kGenres, eq, Pick(rng, genres_));
    case 2:
      return MakeConstraint(SlotName::kKeywords, eq, Pick(rng, keywords_));
    case 3:
      return MakeConstraint(SlotName::kActors, eq, Pick(rng, actors_));
    case 4:
      return MakeConstraint(SlotName::kDirectors, eq, Pick(rng, directors_));
    case 5:
      return MakeConstraint(SlotName::kTitle, Operator::kEq,
                            Pick(rng, titles_));
    case 6: {
      static const std::vector<Operator> ops = {
          Operator::kEq, Operator::kLt, Operator::kGt, Operator::kGeq,
          Operator::kLeq};
      return MakeConstraint(SlotName::kReleaseYear, Pick(rng, ops),
                            std::int64_t{Uniform(rng, 1930, 2024)});
    }
    case 7:
      return MakeConstraint(SlotName::kDuration,
                            Chance(rng, 0.5) ? Operator::kLt : Operator::kGeq,
                            std::int64_t{Uniform(rng, 80, 180)});
    case 8:
      return MakeConstraint(SlotName::kRating,
                            Chance(rng, 0.5) ? Operator::kGeq : Operator::kLt,
                            Uniform(rng, 50, 90) / 10.0);
    default:
      return MakeConstraint(
          Pick(rng, std::vector<SlotName>{SlotName::kGenres,
                                          SlotName::kKeywords,
                                          SlotName::kActors}),
          Operator::kEq, DontCare{});
  }
}

DialogueAct Simulator::RandomAct(std::mt19937_64& rng,
                                 const DialogueState& state) {
  const int roll = Uniform(rng, 0, 99);
  if (roll < 30) {
    std::vector<Constraint> cs;
    const int n = Uniform(rng, 1, 3);
    for (int i = 0; i < n; ++i) cs.push_back(RandomConstraint(rng));
    return UserAct(Intent::kReveal, cs);
  }
  if (roll < 38) {
    const auto& have = state.info_need.constraints();
    if (!have.empty() && Chance(rng, 0.8)) {
      return UserAct(Intent::kRemovePreference, {Pick(rng, have)});
    }
    return UserAct(Intent::kRemovePreference, {RandomConstraint(rng)});
  }
  if (roll < 50) {
    if (Chance(rng, 0.3)) return UserAct(Intent::kInquire);
    std::vector<SlotName> slots = InformableSlots();
    return UserAct(Intent::kInquire, {SlotRef(Pick(rng, slots))});
  }
  if (roll < 58) return UserAct(Intent::kAccept);
  if (roll < 68) {
    DialogueAct act = UserAct(Intent::kReject);
    static const std::vector<FeedbackLabel> labels = {
        FeedbackLabel::kWatched, FeedbackLabel::kDontLike,
        FeedbackLabel::kRejected};
    if (Chance(rng, 0.8)) act.feedback = Pick(rng, labels);
    return act;
  }
  if (roll < 78) return UserAct(Intent::kContinueRecommendation);
  if (roll < 82) return UserAct(Intent::kHi);
  if (roll < 89) return UserAct(Intent::kAcknowledge);
  if (roll < 95) return UserAct(Intent::kDeny);
  return UserAct(Intent::kUnrecognized);
}

std::string Simulator::RandomText(std::mt19937_64& rng,
                                  const DialogueState& state) {
  (void)state;
  auto display = [&](SlotName slot, const std::string& v) {
    return engine_.catalog().DisplayForm(slot, v);
  };
  switch (Uniform(rng, 0, 15)) {
    case 0: return "I want " + Pick(rng, genres_) + " movies";
    case 1: return "something starring " + display(SlotName::kActors, Pick(rng, actors_));
    case 2: return "not directed by " + display(SlotName::kDirectors, Pick(rng, directors_));
    case 3: return "anything from the " + std::to_string(Uniform(rng, 3, 9)) + "0s";
    case 4: return "a movie about " + Pick(rng, keywords_);
    case 5: return "I don't want " + Pick(rng, genres_) + " movies anymore";
    case 6: return "I don't care";
    case 7: return "tell me more";
    case 8: return "who directed it?";
    case 9: return "I like it";
    case 10: return "I have already seen it";
    case 11: return "show me another one";
    case 12: return "hi";
    case 13: return "ok";
    case 14: return "no";
    default: return "purple monkey dishwasher";
  }
}

void Simulator::Check(const Session& before, const Session& after,
                      const TurnResponse& r, int* pending, std::uint64_t seed,
                      Stats* stats) const {
  const int max = engine_.options().policy.max_elicit_questions;
  auto fail = [&](const std::string& what) {
    std::ostringstream out;
    out << "seed " << seed << " turn " << r.turn << ": " << what;
    stats->violations.push_back(out.str());
  };
  ++stats->turns;
  stats->transitions[{before.state.agent_stage, after.state.agent_stage}]++;
  bool resolved = false;
  for (const DialogueAct& act : r.agent_acts) {
    if (act.intent == Intent::kRecommend) {
      ++stats->recommends;
      resolved = true;
      if (!act.item) {
        fail("recommend without item");
      } else {
        if (before.context.Contains(*act.item)) {
          fail("(a) re-recommended " + *act.item);
        }
        if (!oracle::Satisfies(engine_.catalog().Get(*act.item),
                               after.state.info_need)) {
          fail("recommended " + *act.item + " violates the need");
        }
      }
    }
    if (act.intent == Intent::kNoResults) {
      ++stats->no_results;
      resolved = true;
    }
    if (act.intent == Intent::kBye) resolved = true;
    if (act.intent == Intent::kTooManyResults) {
      ++stats->too_many;
      const long expect =
          oracle::Count(engine_.catalog().items(), after.state.info_need);
      if (!act.count || *act.count != expect) {
        fail("(c) TooManyResults count " +
             std::to_string(act.count.value_or(-1)) + " != oracle " +
             std::to_string(expect));
      }
    }
  }
  if (after.state.elicit_count > max || after.state.elicit_count < 0) {
    fail("(b) elicit_count " + std::to_string(after.state.elicit_count));
  }
  try {
    CheckStateInvariants(after.state, max);
  } catch (const Error& e) {
    fail(std::string("state invariant: ") + e.what());
  }
  if (after.state.matching_count !=
      oracle::Count(engine_.catalog().items(), after.state.info_need)) {
    fail("matching_count differs from oracle");
  }
  const bool revealed = std::any_of(
      r.user_acts.begin(), r.user_acts.end(),
      [](const DialogueAct& a) { return a.intent == Intent::kReveal; });
  if (revealed) *pending = 0;
  if (*pending >= 0) {
    ++*pending;
    if (resolved) {
      *pending = -1;
    } else if (*pending > max + 3) {
      fail("(d) no recommendation within " + std::to_string(max + 3) +
           " agent turns of a reveal");
      *pending = -1;
    }
  }
}

std::vector<TurnResponse> Simulator::Run(std::uint64_t seed, Stats* stats) {
  std::mt19937_64 rng(seed);
  std::vector<TurnResponse> responses;
  auto [session, opening] = engine_.Open("sim" + std::to_string(seed), seed, 0);
  responses.push_back(opening);
  ++stats->conversations;
  int pending = -1;
  std::int64_t clock = 0;

  auto step = [&](const TurnInput& input) {
    try {
      auto [next, r] = engine_.Turn(session, input, ++clock);
      Check(session, next, r, &pending, seed, stats);
      session = std::move(next);
      responses.push_back(std::move(r));
    } catch (const std::exception& e) {
      stats->violations.push_back("seed " + std::to_string(seed) +
                                  ": engine threw " + e.what());
    }
  };

  const int random_turns = Uniform(rng, 1, max_random_turns_);
  for (int i = 0; i < random_turns && !session.closed(); ++i) {
    if (Chance(rng, text_share_)) {
      step(TurnInput::Text(RandomText(rng, session.state)));
    } else {
      step(TurnInput::Payload(RandomAct(rng, session.state)));
    }
  }
  // Tail: the user stops stating preferences.
  const int tail = engine_.options().policy.max_elicit_questions + 3;
  static const std::vector<Intent> quiet = {
      Intent::kAcknowledge, Intent::kDeny, Intent::kHi, Intent::kUnrecognized,
      Intent::kContinueRecommendation};
  for (int i = 0; i < tail && !session.closed(); ++i) {
    step(TurnInput::Payload(UserAct(Pick(rng, quiet))));
  }
  if (!session.closed()) step(TurnInput::Payload(UserAct(Intent::kBye)));
  if (pending >= 0) {
    stats->violations.push_back("seed " + std::to_string(seed) +
                                ": (d) conversation ended unresolved");
  }
  return responses;
}

}  // namespace sim
