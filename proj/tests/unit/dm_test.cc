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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "moviechat/core/errors.h"
#include "moviechat/dm/dialogue_manager.h"
#include "moviechat/dm/flow.h"
#include "moviechat/dm/policy_config.h"
#include "moviechat/service/engine.h"
#include "support/oracle.h"
#include "support/simulator.h"
#include "support/test_env.h"

namespace moviechat {
namespace {

const Catalog& Small() {
  static const Catalog catalog =
      Catalog::LoadFile(testenv::FixtureDir() / "catalog_small.jsonl");
  return catalog;
}

PolicyConfig LowThreshold() {
  PolicyConfig config;
  config.result_threshold = 1;
  config.max_elicit_questions = 3;
  return config;
}

DialogueAct DontCareAbout(SlotName slot) {
  return UserAct(Intent::kReveal,
                 {MakeConstraint(slot, Operator::kEq, DontCare{})});
}

DialogueAct Reveal(SlotName slot, std::string value,
                   Operator op = Operator::kEq) {
  return UserAct(Intent::kReveal, {MakeConstraint(slot, op, std::move(value))});
}

std::vector<Intent> Intents(const std::vector<DialogueAct>& acts) {
  std::vector<Intent> out;
  for (const auto& a : acts) out.push_back(a.intent);
  return out;
}

struct Convo {
  const DialogueManager& dm;
  DialogueState state;
  DialogueContext context;

  explicit Convo(const DialogueManager& m) : dm(m) {
    TurnOutcome out = dm.Start(state, context);
    state = out.new_state;
    context = out.new_context;
  }
  std::vector<DialogueAct> Say(std::vector<DialogueAct> acts) {
    TurnOutcome out = dm.UpdateState(state, context, acts);
    state = out.new_state;
    context = out.new_context;
    return out.agent_acts;
  }
  std::vector<DialogueAct> Say(DialogueAct act) {
    return Say(std::vector<DialogueAct>{std::move(act)});
  }
};

TEST(PolicyConfigTest, DefaultsValidate) {
  EXPECT_NO_THROW(ValidatePolicyConfig(PolicyConfig{}));
  EXPECT_NO_THROW(ValidatePolicyConfig(testenv::Policy()));
}

TEST(PolicyConfigTest, RejectsBadValues) {
  PolicyConfig dup;
  dup.elicitation_order = {SlotName::kGenres, SlotName::kGenres};
  EXPECT_THROW(ValidatePolicyConfig(dup), ConfigError);
  PolicyConfig neg;
  neg.result_threshold = -1;
  EXPECT_THROW(ValidatePolicyConfig(neg), ConfigError);
  PolicyConfig bad_slot;
  bad_slot.elicitation_order = {SlotName::kPlot};
  EXPECT_THROW(ValidatePolicyConfig(bad_slot), ConfigError);
}

TEST(PolicyConfigTest, JsonRoundTripAndDefaults) {
  PolicyConfig c = LowThreshold();
  c.count_disclosure = false;
  const PolicyConfig back = PolicyConfigFromJson(ToJson(c));
  EXPECT_EQ(back.result_threshold, 1);
  EXPECT_EQ(back.max_elicit_questions, 3);
  EXPECT_FALSE(back.count_disclosure);
  EXPECT_EQ(back.elicitation_order, c.elicitation_order);
  const PolicyConfig partial =
      PolicyConfigFromJson(Json::parse(R"({"result_threshold": 7})"));
  EXPECT_EQ(partial.result_threshold, 7);
  EXPECT_EQ(partial.max_elicit_questions, PolicyConfig{}.max_elicit_questions);
}

TEST(DialogueManagerTest, StartWelcomes) {
  const DialogueManager dm(Small());
  Convo c(dm);
  EXPECT_EQ(Intents(c.state.last_agent_acts),
            std::vector<Intent>{Intent::kWelcome});
  EXPECT_EQ(c.state.agent_stage, AgentStage::kGreeting);
  EXPECT_EQ(c.state.matching_count, 5);
}

TEST(DialogueManagerTest, HiAfterOpeningDoesNotRepeatWelcome) {
  const DialogueManager dm(Small(), LowThreshold());
  Convo c(dm);
  const auto acts = c.Say(UserAct(Intent::kHi));
  // No preferences yet: no count disclosure, straight to the first question.
  EXPECT_EQ(Intents(acts), std::vector<Intent>{Intent::kElicit});
  EXPECT_EQ(acts[0].constraints[0].slot, SlotName::kGenres);
  EXPECT_EQ(c.state.agent_stage, AgentStage::kEliciting);
}

TEST(DialogueManagerTest, HiOnBlankStateWelcomes) {
  const DialogueManager dm(Small(), LowThreshold());
  TurnOutcome out = dm.UpdateState({}, {}, {UserAct(Intent::kHi)});
  EXPECT_EQ(Intents(out.agent_acts),
            (std::vector<Intent>{Intent::kWelcome, Intent::kElicit}));
}

TEST(DialogueManagerTest, TooManyResultsOnlyWithPreferences) {
  const DialogueManager dm(Small(), LowThreshold());
  Convo c(dm);
  auto acts = c.Say(Reveal(SlotName::kGenres, "drama"));
  ASSERT_EQ(Intents(acts),
            (std::vector<Intent>{Intent::kTooManyResults, Intent::kElicit}));
  EXPECT_EQ(acts[0].count, 2);
  EXPECT_EQ(acts[1].constraints[0].slot, SlotName::kKeywords);
  EXPECT_EQ(c.state.elicit_count, 1);

  PolicyConfig quiet = LowThreshold();
  quiet.count_disclosure = false;
  const DialogueManager dm2(Small(), quiet);
  Convo c2(dm2);
  acts = c2.Say(Reveal(SlotName::kGenres, "drama"));
  EXPECT_EQ(Intents(acts), std::vector<Intent>{Intent::kElicit});
}

TEST(DialogueManagerTest, ElicitationFollowsOrderAndSkipsDontCare) {
  const DialogueManager dm(Small(), LowThreshold());
  Convo c(dm);
  c.Say(UserAct(Intent::kHi));
  auto acts = c.Say(DontCareAbout(SlotName::kGenres));
  ASSERT_FALSE(acts.empty());
  EXPECT_EQ(acts.back().intent, Intent::kElicit);
  EXPECT_EQ(acts.back().constraints[0].slot, SlotName::kKeywords);
  EXPECT_TRUE(c.state.info_need.IsDontCare(SlotName::kGenres));
}

TEST(DialogueManagerTest, ElicitCountIsCapped) {
  const DialogueManager dm(Small(), LowThreshold());
  Convo c(dm);
  int elicits = 0;
  for (SlotName slot : {SlotName::kGenres, SlotName::kKeywords,
                        SlotName::kActors, SlotName::kDirectors}) {
    const auto acts = c.Say(DontCareAbout(slot));
    for (const auto& a : acts) elicits += a.intent == Intent::kElicit;
    EXPECT_LE(c.state.elicit_count, 3);
  }
  EXPECT_EQ(elicits, 3);
  EXPECT_EQ(c.state.agent_stage, AgentStage::kRecommending);
  EXPECT_EQ(c.state.current_recommendation, "t2");
}

TEST(DialogueManagerTest, RecommendsBestRankedUnseen) {
  const DialogueManager dm(Small());
  Convo c(dm);
  auto acts = c.Say(Reveal(SlotName::kGenres, "action"));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kRecommend});
  EXPECT_EQ(acts[0].item, "t1");
  DialogueAct watched = UserAct(Intent::kReject);
  watched.feedback = FeedbackLabel::kWatched;
  acts = c.Say(watched);
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kRecommend});
  EXPECT_EQ(acts[0].item, "t5");
  const auto* labels = c.context.LabelsFor("t1");
  ASSERT_NE(labels, nullptr);
  EXPECT_EQ(*labels, std::vector<FeedbackLabel>{FeedbackLabel::kWatched});
  // Both action titles shown: exhausted, with the match count.
  acts = c.Say(UserAct(Intent::kReject));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kNoResults});
  EXPECT_EQ(acts[0].count, 2);
  EXPECT_EQ(c.state.agent_stage, AgentStage::kEliciting);
  EXPECT_FALSE(c.state.current_recommendation.has_value());
}

TEST(DialogueManagerTest, NoMatchesGivesNoResultsZero) {
  const DialogueManager dm(Small());
  Convo c(dm);
  const auto acts = c.Say(Reveal(SlotName::kGenres, "horror"));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kNoResults});
  EXPECT_EQ(acts[0].count, 0);
  EXPECT_EQ(c.state.matching_count, 0);
}

TEST(DialogueManagerTest, RemovePreferenceWidensMatches) {
  const DialogueManager dm(Small());
  Convo c(dm);
  c.Say(Reveal(SlotName::kGenres, "horror"));
  c.Say(UserAct(Intent::kRemovePreference,
                {MakeConstraint(SlotName::kGenres, Operator::kEq, "horror")}));
  EXPECT_EQ(c.state.matching_count, 5);
  EXPECT_EQ(c.state.current_recommendation, "t2");
}

TEST(DialogueManagerTest, InquireInformsAndTracksAttributes) {
  const DialogueManager dm(Small());
  Convo c(dm);
  c.Say(Reveal(SlotName::kGenres, "comedy"));
  ASSERT_EQ(c.state.current_recommendation, "t6");
  auto acts = c.Say(UserAct(Intent::kInquire, {SlotRef(SlotName::kDirectors)}));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kInform});
  ASSERT_EQ(acts[0].constraints.size(), 1u);
  EXPECT_EQ(acts[0].constraints[0].slot, SlotName::kDirectors);
  EXPECT_EQ(std::get<std::string>(acts[0].constraints[0].value), "dee holt");
  EXPECT_EQ(c.state.agent_stage, AgentStage::kInforming);
  EXPECT_EQ(c.state.inquired_attributes,
            std::set<SlotName>{SlotName::kDirectors});
  // Overview.
  acts = c.Say(UserAct(Intent::kInquire));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kInform});
  EXPECT_TRUE(acts[0].constraints.empty());
  const auto* labels = c.context.LabelsFor("t6");
  ASSERT_NE(labels, nullptr);
  EXPECT_EQ(std::count(labels->begin(), labels->end(),
                       FeedbackLabel::kInquired),
            1);
}

TEST(DialogueManagerTest, InquireWithoutRecommendationCantHelp) {
  const DialogueManager dm(Small(), LowThreshold());
  Convo c(dm);
  c.Say(UserAct(Intent::kHi));
  const auto acts = c.Say(UserAct(Intent::kInquire));
  ASSERT_FALSE(acts.empty());
  EXPECT_EQ(acts[0].intent, Intent::kCantHelp);
}

TEST(DialogueManagerTest, AcceptThenContinueUsesSimilarity) {
  const DialogueManager dm(Small());
  Convo c(dm);
  c.Say(DontCareAbout(SlotName::kGenres));
  ASSERT_EQ(c.state.current_recommendation, "t2");
  auto acts = c.Say(UserAct(Intent::kAccept));
  EXPECT_EQ(Intents(acts), std::vector<Intent>{Intent::kAcknowledge});
  EXPECT_EQ(c.state.agent_stage, AgentStage::kAwaitingFeedback);
  acts = c.Say(UserAct(Intent::kContinueRecommendation));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kRecommend});
  // Oracle: most similar unseen item to t2, ties to the better rank.
  const auto& items = Small().items();
  const Item& ref = Small().Get("t2");
  std::string best;
  double best_score = -1;
  for (const std::string& id :
       oracle::Filter(items, c.state.info_need)) {
    if (id == "t2") continue;
    const double s = oracle::Similarity(ref, Small().Get(id));
    if (s > best_score) {
      best_score = s;
      best = id;
    }
  }
  EXPECT_EQ(acts[0].item, best);
  EXPECT_EQ(best, "t1");
}

TEST(DialogueManagerTest, YesNoDependOnStage) {
  const DialogueManager dm(Small());
  Convo c(dm);
  c.Say(Reveal(SlotName::kGenres, "action"));
  // Recommending: yes accepts.
  auto acts = c.Say(UserAct(Intent::kAcknowledge));
  EXPECT_EQ(Intents(acts), std::vector<Intent>{Intent::kAcknowledge});
  EXPECT_EQ(*c.context.LabelsFor("t1"),
            std::vector<FeedbackLabel>{FeedbackLabel::kAccepted});
  // Awaiting feedback: no just acknowledges.
  acts = c.Say(UserAct(Intent::kDeny));
  EXPECT_EQ(Intents(acts), std::vector<Intent>{Intent::kAcknowledge});
  // Awaiting feedback: yes continues.
  acts = c.Say(UserAct(Intent::kAcknowledge));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kRecommend});
  EXPECT_EQ(acts[0].item, "t5");
  // Recommending: no rejects as dont_like.
  acts = c.Say(UserAct(Intent::kDeny));
  EXPECT_EQ(*c.context.LabelsFor("t5"),
            std::vector<FeedbackLabel>{FeedbackLabel::kDontLike});
}

TEST(DialogueManagerTest, ContinueWithoutAcceptRejectsCurrent) {
  const DialogueManager dm(Small());
  Convo c(dm);
  c.Say(Reveal(SlotName::kGenres, "action"));
  const auto acts = c.Say(UserAct(Intent::kContinueRecommendation));
  ASSERT_EQ(Intents(acts), std::vector<Intent>{Intent::kRecommend});
  EXPECT_EQ(acts[0].item, "t5");
  EXPECT_EQ(*c.context.LabelsFor("t1"),
            std::vector<FeedbackLabel>{FeedbackLabel::kRejected});
}

TEST(DialogueManagerTest, ByeCloses) {
  const DialogueManager dm(Small());
  Convo c(dm);
  c.Say(Reveal(SlotName::kGenres, "action"));
  const auto acts = c.Say(UserAct(Intent::kBye));
  EXPECT_EQ(Intents(acts), std::vector<Intent>{Intent::kBye});
  EXPECT_EQ(c.state.agent_stage, AgentStage::kClosing);
  EXPECT_FALSE(c.state.current_recommendation.has_value());
}

TEST(DialogueManagerTest, MalformedActsGetCantHelp) {
  const DialogueManager dm(Small());
  Convo c(dm);
  const auto acts = c.Say(AgentAct(Intent::kRecommend));
  ASSERT_FALSE(acts.empty());
  EXPECT_EQ(acts[0].intent, Intent::kCantHelp);
  EXPECT_EQ(c.state.agent_stage, AgentStage::kGreeting);
}

TEST(DialogueManagerTest, UpdateIsPure) {
  const DialogueManager dm(Small(), LowThreshold());
  DialogueState s;
  DialogueContext ctx;
  const std::vector<DialogueAct> acts = {Reveal(SlotName::kGenres, "drama")};
  const TurnOutcome a = dm.UpdateState(s, ctx, acts);
  const TurnOutcome b = dm.UpdateState(s, ctx, acts);
  EXPECT_EQ(a.agent_acts, b.agent_acts);
  EXPECT_EQ(a.new_state, b.new_state);
  EXPECT_EQ(a.new_context, b.new_context);
  EXPECT_EQ(s, DialogueState{});
}

TEST(DialogueManagerTest, TraceOnlyWhenEnabled) {
  DialogueManager dm(Small());
  TurnOutcome out =
      dm.UpdateState({}, {}, {Reveal(SlotName::kGenres, "drama")});
  EXPECT_TRUE(out.trace.empty());
  dm.set_trace(true);
  out = dm.UpdateState({}, {}, {Reveal(SlotName::kGenres, "drama")});
  EXPECT_FALSE(out.trace.empty());
}

TEST(DialogueManagerTest, RemovingAbsentPreferenceAddsNote) {
  const DialogueManager dm(Small());
  const TurnOutcome out = dm.UpdateState(
      {}, {},
      {UserAct(Intent::kRemovePreference,
               {MakeConstraint(SlotName::kGenres, Operator::kEq, "drama")})});
  EXPECT_FALSE(out.notes.empty());
}

TEST(DialogueManagerTest, MatchingItemsAgreeWithOracle) {
  PolicyConfig config;
  config.matching_cap = 3;
  const DialogueManager dm(Small(), config);
  DialogueState s;
  s.info_need.Add(MakeConstraint(SlotName::kActors, Operator::kEq, "ann vale"));
  dm.RefreshMatches(s);
  const auto expected = oracle::Filter(Small().items(), s.info_need);
  EXPECT_EQ(s.matching_count, static_cast<std::int64_t>(expected.size()));
  EXPECT_EQ(s.matching_items,
            std::vector<std::string>(expected.begin(), expected.begin() + 3));
}

TEST(ItemSimilarityTest, Jaccard) {
  const Item& t1 = Small().Get("t1");
  const Item& t5 = Small().Get("t5");
  // {action, drama, harbor, rescue} vs {action, robot, rescue}.
  EXPECT_DOUBLE_EQ(ItemSimilarity(t1, t5), 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(ItemSimilarity(t1, t1), 1.0);
  EXPECT_DOUBLE_EQ(ItemSimilarity(t1, t5), oracle::Similarity(t1, t5));
}

TEST(FlowTest, StageAfter) {
  using S = AgentStage;
  EXPECT_EQ(StageAfter(S::kGreeting, {AgentAct(Intent::kWelcome)}, false),
            S::kGreeting);
  EXPECT_EQ(StageAfter(S::kGreeting,
                       {AgentAct(Intent::kWelcome),
                        AgentAct(Intent::kElicit, {SlotRef(SlotName::kGenres)})},
                       false),
            S::kEliciting);
  DialogueAct rec = AgentAct(Intent::kRecommend);
  rec.item = "t1";
  EXPECT_EQ(StageAfter(S::kEliciting, {rec}, true), S::kRecommending);
  EXPECT_EQ(StageAfter(S::kRecommending, {AgentAct(Intent::kInform)}, true),
            S::kInforming);
  EXPECT_EQ(StageAfter(S::kInforming, {AgentAct(Intent::kAcknowledge)}, true),
            S::kAwaitingFeedback);
  EXPECT_EQ(StageAfter(S::kEliciting, {AgentAct(Intent::kAcknowledge)}, false),
            S::kEliciting);
  EXPECT_EQ(StageAfter(S::kRecommending, {AgentAct(Intent::kCantHelp)}, true),
            S::kRecommending);
  EXPECT_EQ(StageAfter(S::kAwaitingFeedback, {AgentAct(Intent::kBye)}, false),
            S::kClosing);
}

TEST(FlowTest, EdgesAndSelfLoops) {
  for (AgentStage s : kAllStages) {
    if (s == AgentStage::kClosing) continue;
    EXPECT_TRUE(IsFlowEdge(s, AgentStage::kClosing)) << StageToString(s);
    EXPECT_TRUE(IsFlowEdge(s, s)) << StageToString(s);
  }
  EXPECT_TRUE(IsFlowEdge(AgentStage::kGreeting, AgentStage::kEliciting));
  EXPECT_TRUE(IsFlowEdge(AgentStage::kEliciting, AgentStage::kRecommending));
  EXPECT_TRUE(IsFlowEdge(AgentStage::kRecommending, AgentStage::kInforming));
  EXPECT_TRUE(
      IsFlowEdge(AgentStage::kInforming, AgentStage::kAwaitingFeedback));
  EXPECT_FALSE(IsFlowEdge(AgentStage::kClosing, AgentStage::kEliciting));
  EXPECT_FALSE(IsFlowEdge(AgentStage::kGreeting, AgentStage::kInforming));
}

TEST(FlowTest, EmittableActsValidate) {
  const auto acts = EmittableAgentActs(PolicyConfig{});
  std::set<Intent> intents;
  for (const auto& a : acts) {
    EXPECT_NO_THROW(ValidateAct(a)) << ActToString(a);
    EXPECT_EQ(a.author, Author::kAgent);
    intents.insert(a.intent);
  }
  for (Intent i : {Intent::kElicit, Intent::kTooManyResults,
                   Intent::kRecommend, Intent::kNoResults, Intent::kInform,
                   Intent::kWelcome, Intent::kCantHelp, Intent::kAcknowledge,
                   Intent::kBye}) {
    EXPECT_TRUE(intents.count(i)) << IntentToString(i);
  }
}

// Policy properties over random conversations on the bundled catalog.
TEST(PolicyPropertyTest, SimulatedConversationsKeepInvariants) {
  EngineOptions options;
  options.policy = testenv::Policy();
  const Engine engine(testenv::BundledCatalog(), testenv::Patterns(),
                      testenv::Templates(), options);
  sim::Simulator simulator(engine);
  sim::Stats stats;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) simulator.Run(seed, &stats);
  EXPECT_EQ(stats.conversations, 200);
  EXPECT_GT(stats.recommends, 0);
  EXPECT_GT(stats.too_many, 0);
  for (const auto& [edge, n] : stats.transitions) {
    EXPECT_TRUE(IsFlowEdge(edge.first, edge.second))
        << StageToString(edge.first) << " -> " << StageToString(edge.second);
  }
  ASSERT_TRUE(stats.violations.empty()) << stats.violations.front();
}

}  // namespace
}  // namespace moviechat
