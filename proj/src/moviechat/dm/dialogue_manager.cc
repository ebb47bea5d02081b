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

#include "moviechat/dm/dialogue_manager.h"

#include <algorithm>
#include <set>

#include "moviechat/core/errors.h"

namespace moviechat {
namespace {

// What the turn asks the policy to do, after folding all user acts.
enum class Driver {
  kNone,
  kPolicy,  // preferences changed, or a rejection
  kHi,
  kAccept,
  kInquire,
  kContinue,
  kAcknowledge,
  kCantHelp,
};

std::set<std::string> CanonSet(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::set<std::string> out;
  for (const auto& v : a) out.insert(Canonicalize(v));
  for (const auto& v : b) out.insert(Canonicalize(v));
  return out;
}

bool HasLabel(const DialogueContext& context, const std::string& item,
              FeedbackLabel label) {
  const auto* labels = context.LabelsFor(item);
  return labels != nullptr &&
         std::find(labels->begin(), labels->end(), label) != labels->end();
}

void Note(std::vector<std::string>* trace, bool on, std::string line) {
  if (on && trace != nullptr) trace->push_back(std::move(line));
}

void ClearRecommendation(DialogueState& state) {
  state.current_recommendation.reset();
  state.inquired_attributes.clear();
}

}  // namespace

double ItemSimilarity(const Item& a, const Item& b) {
  const auto x = CanonSet(a.genres, a.keywords);
  const auto y = CanonSet(b.genres, b.keywords);
  if (x.empty() && y.empty()) return 0.0;
  size_t common = 0;
  for (const auto& v : x) common += y.count(v);
  return static_cast<double>(common) /
         static_cast<double>(x.size() + y.size() - common);
}

AgentStage StageAfter(AgentStage previous, const std::vector<DialogueAct>& acts,
                      bool has_recommendation) {
  AgentStage stage = previous;
  for (const DialogueAct& act : acts) {
    switch (act.intent) {
      case Intent::kWelcome:
        stage = AgentStage::kGreeting;
        break;
      case Intent::kElicit:
      case Intent::kTooManyResults:
      case Intent::kNoResults:
        stage = AgentStage::kEliciting;
        break;
      case Intent::kRecommend:
        stage = AgentStage::kRecommending;
        break;
      case Intent::kInform:
        stage = AgentStage::kInforming;
        break;
      case Intent::kAcknowledge:
        if (has_recommendation) stage = AgentStage::kAwaitingFeedback;
        break;
      case Intent::kBye:
        stage = AgentStage::kClosing;
        break;
      default:
        break;
    }
  }
  return stage;
}

DialogueManager::DialogueManager(const Catalog& catalog, PolicyConfig config)
    : catalog_(catalog), config_(std::move(config)) {
  ValidatePolicyConfig(config_);
}

void DialogueManager::RefreshMatches(DialogueState& state) const {
  std::vector<std::string> ids =
      catalog_.Filter(state.info_need, filter_options());
  state.matching_count = static_cast<std::int64_t>(ids.size());
  if (ids.size() > static_cast<size_t>(config_.matching_cap)) {
    ids.resize(config_.matching_cap);
  }
  state.matching_items = std::move(ids);
}

std::optional<SlotName> DialogueManager::NextElicitSlot(
    const DialogueState& state) const {
  for (SlotName slot : config_.elicitation_order) {
    if (!state.info_need.HasConstraints(slot) &&
        !state.info_need.IsDontCare(slot)) {
      return slot;
    }
  }
  return std::nullopt;
}

std::optional<std::string> DialogueManager::Recommend(
    const DialogueState& state, const DialogueContext& context) const {
  for (const std::string& id :
       catalog_.Filter(state.info_need, filter_options())) {
    if (!context.Contains(id)) return id;
  }
  return std::nullopt;
}

std::optional<std::string> DialogueManager::SimilarRecommendation(
    const DialogueState& state, const DialogueContext& context,
    const std::string& accepted) const {
  const Item& reference = catalog_.Get(accepted);
  std::optional<std::string> best;
  double best_score = -1.0;
  // Filter() is rank ordered, so a strict improvement test keeps the
  // better-ranked item on ties.
  for (const std::string& id :
       catalog_.Filter(state.info_need, filter_options())) {
    if (context.Contains(id) || id == accepted) continue;
    const double score = ItemSimilarity(reference, catalog_.Get(id));
    if (score > best_score) {
      best_score = score;
      best = id;
    }
  }
  return best;
}

DialogueAct DialogueManager::InformAct(const Item& item,
                                       std::optional<SlotName> slot) const {
  DialogueAct act = AgentAct(Intent::kInform);
  if (!slot) return act;
  auto add = [&](Value v) {
    act.constraints.push_back(MakeConstraint(*slot, Operator::kEq, std::move(v)));
  };
  auto add_all = [&](const std::vector<std::string>& values) {
    for (const std::string& v : values) add(v);
  };
  switch (*slot) {
    case SlotName::kGenres:
      add_all(item.genres);
      break;
    case SlotName::kKeywords:
      add_all(item.keywords);
      break;
    case SlotName::kActors:
      add_all(item.actors);
      break;
    case SlotName::kDirectors:
      add_all(item.directors);
      break;
    case SlotName::kTitle:
      add(item.title);
      break;
    case SlotName::kPlot:
      if (!Canonicalize(item.plot).empty()) add(item.plot);
      break;
    case SlotName::kReleaseYear:
      add(std::int64_t{item.release_year});
      break;
    case SlotName::kDuration:
      if (item.duration > 0) add(std::int64_t{item.duration});
      break;
    case SlotName::kRating:
      add(item.rating);
      break;
  }
  return act;
}

std::vector<DialogueAct> DialogueManager::NextAgentActs(
    DialogueState& state, DialogueContext& context,
    std::vector<std::string>* trace) const {
  const std::int64_t count = state.matching_count;
  if (count == 0) {
    Note(trace, trace_, "rule 1: no item matches the information need");
    ClearRecommendation(state);
    DialogueAct act = AgentAct(Intent::kNoResults);
    act.count = 0;
    return {act};
  }
  const auto slot = NextElicitSlot(state);
  if (count > config_.result_threshold &&
      state.elicit_count < config_.max_elicit_questions && slot) {
    Note(trace, trace_,
         "rule 2: " + std::to_string(count) + " matches > " +
             std::to_string(config_.result_threshold) + ", elicit " +
             std::string(SlotToString(*slot)));
    ClearRecommendation(state);
    std::vector<DialogueAct> acts;
    if (config_.count_disclosure && PreferenceCount(state.info_need) > 0) {
      DialogueAct too_many = AgentAct(Intent::kTooManyResults);
      too_many.count = count;
      acts.push_back(too_many);
    }
    acts.push_back(AgentAct(Intent::kElicit, {SlotRef(*slot)}));
    ++state.elicit_count;
    return acts;
  }
  const auto item = Recommend(state, context);
  if (!item) {
    Note(trace, trace_,
         "rule 3: all " + std::to_string(count) + " matches already shown");
    ClearRecommendation(state);
    DialogueAct act = AgentAct(Intent::kNoResults);
    act.count = count;
    return {act};
  }
  Note(trace, trace_, "rule 3: recommend " + *item);
  context.Register(*item);
  state.current_recommendation = *item;
  state.inquired_attributes.clear();
  DialogueAct act = AgentAct(Intent::kRecommend);
  act.item = *item;
  return {act};
}

TurnOutcome DialogueManager::Start(const DialogueState& state,
                                   const DialogueContext& context) const {
  TurnOutcome out{{AgentAct(Intent::kWelcome)}, state, context, {}, {}};
  RefreshMatches(out.new_state);
  out.new_state.agent_stage = AgentStage::kGreeting;
  out.new_state.last_agent_acts = out.agent_acts;
  return out;
}

TurnOutcome DialogueManager::UpdateState(
    const DialogueState& state, const DialogueContext& context,
    const std::vector<DialogueAct>& user_acts) const {
  TurnOutcome out;
  out.new_state = state;
  out.new_context = context;
  DialogueState& s = out.new_state;
  DialogueContext& ctx = out.new_context;
  std::vector<std::string>* trace = &out.trace;
  const AgentStage stage = state.agent_stage;
  const std::optional<std::string> rec = state.current_recommendation;

  // Stage (i): fold user acts into the need and the context.
  Driver driver = Driver::kNone;
  bool preferences_changed = false;
  bool bye = false;
  std::vector<SlotName> inquired;
  for (const DialogueAct& original : user_acts) {
    DialogueAct act = original;
    try {
      ValidateAct(act);
      if (act.author != Author::kUser) throw ValidationError("not a user act");
    } catch (const ValidationError& e) {
      Note(trace, trace_, std::string("malformed act: ") + e.what());
      driver = Driver::kCantHelp;
      continue;
    }
    // Yes/no answers mean different things depending on the question.
    if (act.intent == Intent::kAcknowledge || act.intent == Intent::kDeny) {
      const bool yes = act.intent == Intent::kAcknowledge;
      if (stage == AgentStage::kRecommending ||
          stage == AgentStage::kInforming) {
        act = UserAct(yes ? Intent::kAccept : Intent::kReject);
        if (!yes) act.feedback = FeedbackLabel::kDontLike;
      } else if (stage == AgentStage::kAwaitingFeedback) {
        if (yes) {
          act = UserAct(Intent::kContinueRecommendation);
        } else {
          driver = Driver::kAcknowledge;
          continue;
        }
      } else {
        driver = Driver::kCantHelp;
        continue;
      }
    }
    switch (act.intent) {
      case Intent::kReveal:
      case Intent::kRemovePreference:
        try {
          s.info_need = ApplyUserAct(s.info_need, act, &out.notes);
          preferences_changed = true;
        } catch (const ValidationError& e) {
          Note(trace, trace_, std::string("rejected preference: ") + e.what());
          driver = Driver::kCantHelp;
        }
        break;
      case Intent::kAccept:
        if (!rec) {
          driver = Driver::kCantHelp;
          break;
        }
        ctx.Append(*rec, FeedbackLabel::kAccepted);
        driver = Driver::kAccept;
        break;
      case Intent::kReject:
        if (!rec) {
          driver = Driver::kCantHelp;
          break;
        }
        ctx.Append(*rec, act.feedback.value_or(FeedbackLabel::kRejected));
        driver = Driver::kPolicy;
        break;
      case Intent::kInquire:
        if (!rec) {
          driver = Driver::kCantHelp;
          break;
        }
        if (!HasLabel(ctx, *rec, FeedbackLabel::kInquired)) {
          ctx.Append(*rec, FeedbackLabel::kInquired);
        }
        inquired.clear();
        for (const Constraint& c : act.constraints) inquired.push_back(c.slot);
        driver = Driver::kInquire;
        break;
      case Intent::kContinueRecommendation:
        driver = rec ? Driver::kContinue : Driver::kCantHelp;
        break;
      case Intent::kHi:
        driver = Driver::kHi;
        break;
      case Intent::kBye:
        bye = true;
        break;
      default:
        driver = Driver::kCantHelp;
        break;
    }
  }
  if (preferences_changed) driver = Driver::kPolicy;

  // Stage (ii): matches for the (possibly) new need.
  RefreshMatches(s);

  // Stage (iii): agent acts.
  std::vector<DialogueAct>& acts = out.agent_acts;
  if (bye) {
    Note(trace, trace_, "bye");
    ClearRecommendation(s);
    acts.push_back(AgentAct(Intent::kBye));
  } else {
    switch (driver) {
      case Driver::kPolicy:
        acts = NextAgentActs(s, ctx, trace);
        break;
      case Driver::kHi:
        if (stage == AgentStage::kGreeting) {
          // Greet only if the opening turn has not done so already.
          const bool welcomed = std::any_of(
              state.last_agent_acts.begin(), state.last_agent_acts.end(),
              [](const DialogueAct& a) { return a.intent == Intent::kWelcome; });
          if (!welcomed) acts.push_back(AgentAct(Intent::kWelcome));
          for (DialogueAct& a : NextAgentActs(s, ctx, trace)) {
            acts.push_back(std::move(a));
          }
        } else {
          acts.push_back(AgentAct(Intent::kCantHelp));
          if (stage == AgentStage::kEliciting) {
            for (DialogueAct& a : NextAgentActs(s, ctx, trace)) {
              acts.push_back(std::move(a));
            }
          }
        }
        break;
      case Driver::kAccept:
      case Driver::kAcknowledge:
        acts.push_back(AgentAct(Intent::kAcknowledge));
        break;
      case Driver::kInquire: {
        const Item& item = catalog_.Get(*rec);
        if (inquired.empty()) {
          acts.push_back(InformAct(item, std::nullopt));
        }
        for (SlotName slot : inquired) {
          acts.push_back(InformAct(item, slot));
          s.inquired_attributes.insert(slot);
        }
        Note(trace, trace_, "rule 4: inform about " + *rec);
        break;
      }
      case Driver::kContinue: {
        std::optional<std::string> next;
        if (HasLabel(ctx, *rec, FeedbackLabel::kAccepted)) {
          next = SimilarRecommendation(s, ctx, *rec);
          Note(trace, trace_, "similar to " + *rec);
        } else {
          ctx.Append(*rec, FeedbackLabel::kRejected);
          next = Recommend(s, ctx);
        }
        ClearRecommendation(s);
        if (next) {
          ctx.Register(*next);
          s.current_recommendation = *next;
          DialogueAct act = AgentAct(Intent::kRecommend);
          act.item = *next;
          acts.push_back(act);
        } else {
          DialogueAct act = AgentAct(Intent::kNoResults);
          act.count = s.matching_count;
          acts.push_back(act);
        }
        break;
      }
      case Driver::kNone:
      case Driver::kCantHelp:
        Note(trace, trace_, "rule 6: cannot help");
        acts.push_back(AgentAct(Intent::kCantHelp));
        if (stage == AgentStage::kEliciting) {
          for (DialogueAct& a : NextAgentActs(s, ctx, trace)) {
            acts.push_back(std::move(a));
          }
        }
        break;
    }
  }
  s.agent_stage =
      StageAfter(stage, acts, s.current_recommendation.has_value());
  if (!HasRecommendationStage(s.agent_stage)) ClearRecommendation(s);
  s.last_user_acts = user_acts;
  s.last_agent_acts = acts;
  return out;
}

}  // namespace moviechat
