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

#ifndef MOVIECHAT_DM_FLOW_H_
#define MOVIECHAT_DM_FLOW_H_

#include <set>
#include <utility>
#include <vector>

#include "moviechat/core/dialogue_act.h"
#include "moviechat/core/dialogue_state.h"
#include "moviechat/dm/policy_config.h"

namespace moviechat {

using StageEdge = std::pair<AgentStage, AgentStage>;

// Allowed agent-stage transitions of the dialogue flow. Self-loops cover
// turns the agent answers with CantHelp or a repeated act. Restart is a
// session command that resets to greeting and is not part of the graph.
const std::set<StageEdge>& FlowEdges();
bool IsFlowEdge(AgentStage from, AgentStage to);

// Attributes the agent can inform about, in button order.
const std::vector<SlotName>& InformableSlots();

// One prototype of every agent act shape the policy can emit under
// `config` (every Elicit slot, every Inform attribute, both NoResults
// variants, ...). Used to check template coverage.
std::vector<DialogueAct> EmittableAgentActs(const PolicyConfig& config);

}  // namespace moviechat

#endif  // MOVIECHAT_DM_FLOW_H_
