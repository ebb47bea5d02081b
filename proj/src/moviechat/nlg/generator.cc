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

#include "moviechat/nlg/generator.h"

#include <cctype>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <set>

#include "moviechat/core/errors.h"
#include "moviechat/dm/flow.h"
#include "moviechat/nlu/nlu.h"

namespace moviechat {
namespace {

std::string TitleCase(const std::string& s) {
  std::string out = s;
  bool start = true;
  for (char& c : out) {
    if (start && std::isalpha(static_cast<unsigned char>(c))) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    start = c == ' ' || c == '-';
  }
  return out;
}

std::string FormatRating(double rating) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", rating);
  return buf;
}

std::string NumberText(SlotName slot, const Value& value) {
  const auto n = NumericValue(value);
  if (!n) return ValueToString(value);
  if (slot == SlotName::kRating) return FormatRating(*n);
  return std::to_string(static_cast<std::int64_t>(*n));
}

}  // namespace

std::string JoinList(const std::vector<std::string>& parts,
                     const std::string& last) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += i + 1 == parts.size() ? last : ", ";
    out += parts[i];
  }
  return out;
}

Json ToJson(const ButtonSpec& button) {
  Json json{{"label", button.label}};
  if (button.payload) {
    json["payload"] = ToJson(*button.payload);
  } else {
    json["payload"] = Json{{"command", button.command.value_or("")}};
  }
  return json;
}

ButtonSpec ButtonFromJson(const Json& json) {
  try {
    ButtonSpec button;
    button.label = json.at("label").get<std::string>();
    const Json& payload = json.at("payload");
    if (payload.contains("command")) {
      button.command = payload.at("command").get<std::string>();
    } else {
      button.payload = ActFromJson(payload);
    }
    return button;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("button: ") + e.what());
  }
}

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t turn,
                      std::uint64_t index) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed ^ (turn * 0x9E3779B97F4A7C15ULL) ^
                    (index * 0xC2B2AE3D27D4EB4FULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Generator::Generator(const TemplateSet& templates, const Catalog* catalog,
                     NlgOptions options)
    : templates_(templates), catalog_(catalog), options_(options) {}

size_t Generator::Choose(size_t n, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return static_cast<size_t>(rng() % n);
}

std::string Generator::Display(SlotName slot, const Value& value) const {
  if (IsNumeric(slot)) return NumberText(slot, value);
  const auto* s = std::get_if<std::string>(&value);
  if (s == nullptr) return ValueToString(value);
  if (catalog_ != nullptr && HasLexicon(slot)) {
    const std::string shown = catalog_->DisplayForm(slot, *s);
    if (shown != *s || slot == SlotName::kGenres ||
        slot == SlotName::kKeywords) {
      return shown;
    }
  }
  if (slot == SlotName::kGenres || slot == SlotName::kKeywords ||
      slot == SlotName::kPlot) {
    return *s;
  }
  return TitleCase(*s);
}

std::string Generator::JoinValues(
    const std::vector<Constraint>& constraints) const {
  std::vector<std::string> parts;
  for (const Constraint& c : constraints) parts.push_back(Display(c.slot, c.value));
  return JoinList(parts);
}

std::string Generator::Describe(const InformationNeed& need) const {
  std::vector<std::string> sections;
  for (SlotName slot : need.ConstrainedSlots()) {
    const std::vector<Constraint> cs = need.ConstraintsFor(slot);
    std::vector<std::string> parts;
    if (IsNumeric(slot)) {
      std::optional<Constraint> lower, upper;
      for (const Constraint& c : cs) {
        if ((c.op == Operator::kGeq || c.op == Operator::kGt) && !lower) {
          lower = c;
        } else if ((c.op == Operator::kLt || c.op == Operator::kLeq) &&
                   !upper) {
          upper = c;
        } else {
          const std::string v = NumberText(slot, c.value);
          switch (c.op) {
            case Operator::kEq:
              parts.push_back(v);
              break;
            case Operator::kNeq:
              parts.push_back("not " + v);
              break;
            case Operator::kGt:
              parts.push_back("after " + v);
              break;
            case Operator::kGeq:
              parts.push_back(v + " or later");
              break;
            case Operator::kLt:
              parts.push_back("before " + v);
              break;
            case Operator::kLeq:
              parts.push_back(v + " or earlier");
              break;
          }
        }
      }
      if (lower && upper) {
        const std::string lo = NumberText(slot, lower->value);
        const std::string hi = NumberText(slot, upper->value);
        const bool inclusive = upper->op == Operator::kLeq;
        parts.insert(parts.begin(),
                     (lower->op == Operator::kGt ? "after " + lo + " "
                                                 : "from " + lo + " ") +
                         (inclusive ? "to " : "until ") + hi);
      } else if (lower) {
        const std::string lo = NumberText(slot, lower->value);
        parts.insert(parts.begin(), lower->op == Operator::kGt
                                        ? "after " + lo
                                        : lo + " or later");
      } else if (upper) {
        const std::string hi = NumberText(slot, upper->value);
        parts.insert(parts.begin(), upper->op == Operator::kLt
                                        ? "before " + hi
                                        : hi + " or earlier");
      }
    } else {
      for (const Constraint& c : cs) {
        const std::string v = Display(slot, c.value);
        parts.push_back(c.op == Operator::kNeq ? "not " + v : v);
      }
    }
    sections.push_back(templates_.SlotLabel(slot) + " " + JoinList(parts));
  }
  std::string out;
  for (size_t i = 0; i < sections.size(); ++i) {
    if (i > 0) out += "; ";
    out += sections[i];
  }
  return out;
}

std::string Generator::SummarizeIn(const InformationNeed& need) const {
  const std::string body = Describe(need);
  if (body.empty()) return templates_.Phrase("recap_empty");
  return templates_.Phrase("recap_prefix") + body + ".";
}

bool Generator::WantsRecap(const std::vector<DialogueAct>& acts) const {
  switch (options_.recap) {
    case RecapMode::kNever:
      return false;
    case RecapMode::kEveryTurn:
      return true;
    case RecapMode::kElicit:
      for (const DialogueAct& act : acts) {
        if (act.intent == Intent::kElicit) return true;
      }
      return false;
  }
  return false;
}

namespace {

// "a {x}" becomes "an {x}" when the bound value starts with a vowel.
std::string FixArticles(const std::string& text,
                        const std::map<std::string, std::string>& bindings) {
  std::string out;
  size_t i = 0;
  while (i < text.size()) {
    const bool word_start = i == 0 || text[i - 1] == ' ';
    if (word_start && text.compare(i, 3, "a {") == 0) {
      const size_t close = text.find('}', i + 3);
      if (close != std::string::npos) {
        auto it = bindings.find(text.substr(i + 3, close - i - 3));
        if (it != bindings.end() && !it->second.empty() &&
            std::strchr("aeiouAEIOU", it->second[0]) != nullptr) {
          out += "an";
          ++i;
          continue;
        }
      }
    }
    out += text[i++];
  }
  return out;
}

}  // namespace

std::string Generator::Render(const DialogueAct& act,
                              const DialogueState& state,
                              std::uint64_t seed) const {
  const std::vector<std::string>& options =
      templates_.Get(act.intent, Signature(act));
  const std::string& chosen = options[Choose(options.size(), seed)];

  std::map<std::string, std::string> b;
  const std::string described = Describe(state.info_need);
  b["preferences"] =
      described.empty() ? templates_.Phrase("no_preferences") : described;
  if (act.count) b["count"] = std::to_string(*act.count);
  if (!act.constraints.empty()) {
    const SlotName slot = act.constraints.front().slot;
    b["slot"] = templates_.SlotLabel(slot);
    bool filled = false;
    for (const Constraint& c : act.constraints) filled = filled || !IsEmpty(c.value);
    if (filled) b["value"] = JoinValues(act.constraints);
  }
  // Item details: the recommended item, or the one being discussed.
  std::optional<std::string> item_id = act.item;
  if (!item_id) item_id = state.current_recommendation;
  const Item* item = nullptr;
  if (item_id && catalog_ != nullptr) item = catalog_->Find(*item_id);
  if (item != nullptr) {
    b["title"] = item->title;
    b["year"] = std::to_string(item->release_year);
    b["rating"] = FormatRating(item->rating);
    b["plot"] = item->plot;
    std::vector<std::string> genres;
    for (const std::string& g : item->genres) {
      if (genres.size() < 2) genres.push_back(Canonicalize(g));
    }
    b["description"] = JoinList(genres);
    if (act.intent == Intent::kInform && !act.constraints.empty()) {
      const SlotName slot = act.constraints.front().slot;
      if (slot == SlotName::kPlot) b["value"] = item->plot;
      if (slot == SlotName::kTitle) b["value"] = item->title;
    }
  } else if (item_id) {
    b["title"] = *item_id;
  }
  return Substitute(FixArticles(chosen, b), b);
}

std::vector<ButtonSpec> Generator::OptionsFor(
    const DialogueState& state, const DialogueContext& context) const {
  (void)context;
  std::vector<ButtonSpec> buttons;
  std::set<std::string> labels;
  auto add_act = [&](std::string label, DialogueAct act) {
    if (!labels.insert(label).second) return;
    buttons.push_back(ButtonSpec{std::move(label), std::move(act), {}});
  };
  auto add_command = [&](std::string label, std::string command) {
    if (!labels.insert(label).second) return;
    buttons.push_back(ButtonSpec{std::move(label), {}, std::move(command)});
  };
  auto fill = [&](const std::string& key, SlotName slot, const Value& value) {
    return Substitute(templates_.ButtonLabel(key),
                      {{"slot", templates_.SlotLabel(slot)},
                       {"value", Display(slot, value)}});
  };

  if (state.agent_stage == AgentStage::kClosing) {
    add_command(templates_.ButtonLabel("restart"), "/restart");
    return buttons;
  }

  // A name taken both as actor and as director: offer to drop either role.
  const InformationNeed& need = state.info_need;
  for (const Constraint& a : need.ConstraintsFor(SlotName::kActors)) {
    if (a.op != Operator::kEq) continue;
    for (const Constraint& d : need.ConstraintsFor(SlotName::kDirectors)) {
      if (d.op != Operator::kEq || !(d.value == a.value)) continue;
      add_act(fill("remove_actor", SlotName::kActors, a.value),
              UserAct(Intent::kRemovePreference,
                      {MakeConstraint(SlotName::kDirectors, Operator::kEq,
                                      d.value)}));
      add_act(fill("remove_director", SlotName::kDirectors, d.value),
              UserAct(Intent::kRemovePreference,
                      {MakeConstraint(SlotName::kActors, Operator::kEq,
                                      a.value)}));
    }
  }

  switch (state.agent_stage) {
    case AgentStage::kEliciting: {
      bool no_results = false;
      for (const DialogueAct& act : state.last_agent_acts) {
        no_results = no_results || act.intent == Intent::kNoResults;
      }
      if (no_results) {
        for (const Constraint& c : need.constraints()) {
          add_act(fill("remove", c.slot, c.value),
                  UserAct(Intent::kRemovePreference, {c}));
        }
        add_command(templates_.ButtonLabel("restart"), "/restart");
        break;
      }
      if (const auto slot = ElicitedSlot(state)) {
        add_act(templates_.ButtonLabel("dont_care"),
                UserAct(Intent::kReveal,
                        {MakeConstraint(*slot, Operator::kEq, DontCare{})}));
      }
      break;
    }
    case AgentStage::kRecommending: {
      add_act(templates_.ButtonLabel("accept"), UserAct(Intent::kAccept));
      DialogueAct watched = UserAct(Intent::kReject);
      watched.feedback = FeedbackLabel::kWatched;
      add_act(templates_.ButtonLabel("reject_watched"), watched);
      DialogueAct dislike = UserAct(Intent::kReject);
      dislike.feedback = FeedbackLabel::kDontLike;
      add_act(templates_.ButtonLabel("reject_dont_like"), dislike);
      add_act(templates_.ButtonLabel("inquire"), UserAct(Intent::kInquire));
      break;
    }
    case AgentStage::kInforming: {
      for (SlotName slot : InformableSlots()) {
        if (slot == SlotName::kKeywords || slot == SlotName::kTitle) continue;
        if (state.inquired_attributes.count(slot) > 0) continue;
        add_act(templates_.ButtonLabel("inquire_" +
                                       std::string(SlotToString(slot))),
                UserAct(Intent::kInquire, {SlotRef(slot)}));
      }
      add_act(templates_.ButtonLabel("continue"),
              UserAct(Intent::kContinueRecommendation));
      break;
    }
    case AgentStage::kAwaitingFeedback:
      add_act(templates_.ButtonLabel("similar"),
              UserAct(Intent::kContinueRecommendation));
      add_command(templates_.ButtonLabel("restart"), "/restart");
      add_act(templates_.ButtonLabel("quit"), UserAct(Intent::kBye));
      break;
    case AgentStage::kGreeting:
    case AgentStage::kClosing:
      break;
  }
  return buttons;
}

}  // namespace moviechat
