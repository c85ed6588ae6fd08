// Copyright 2026 The matlql Authors. All rights reserved.
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

#include "matlql/env.hpp"

#include <string>

namespace matlql {

JointActionSpace::JointActionSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) {
    throw ContractViolation("joint action space needs at least one agent");
  }
  for (int s : sizes_) {
    if (s <= 0) throw ContractViolation("action space sizes must be positive");
    joint_size_ *= s;
  }
}

long JointActionSpace::others_size(AgentId skip) const {
  return joint_size_ / sizes_[skip];
}

long JointActionSpace::JointIndex(const JointAction& ja) const {
  CheckJointAction(ja);
  long idx = 0;
  for (int j = 0; j < num_agents(); ++j) {
    idx = idx * sizes_[j] + ja[j];
  }
  return idx;
}

long JointActionSpace::OthersIndex(const JointAction& ja, AgentId skip) const {
  CheckJointAction(ja);
  long idx = 0;
  for (int j = 0; j < num_agents(); ++j) {
    if (j == skip) continue;
    idx = idx * sizes_[j] + ja[j];
  }
  return idx;
}

JointAction JointActionSpace::FromJointIndex(long index) const {
  JointAction ja(num_agents());
  for (int j = num_agents() - 1; j >= 0; --j) {
    ja[j] = static_cast<ActionId>(index % sizes_[j]);
    index /= sizes_[j];
  }
  return ja;
}

void JointActionSpace::CheckJointAction(const JointAction& ja) const {
  if (static_cast<int>(ja.size()) != num_agents()) {
    throw ContractViolation("joint action arity " + std::to_string(ja.size()) +
                            " does not match agent count " + std::to_string(num_agents()));
  }
  for (int j = 0; j < num_agents(); ++j) {
    if (ja[j] < 0 || ja[j] >= sizes_[j]) {
      throw ContractViolation("action " + std::to_string(ja[j]) + " out of range for agent " +
                              std::to_string(j));
    }
  }
}

void Environment::CheckStepPreconditions(StateId s, const JointAction& ja) const {
  if (s < 0 || s >= num_states()) {
    throw ContractViolation("state " + std::to_string(s) + " out of range");
  }
  if (IsTerminal(s)) {
    throw ContractViolation("stepping from terminal state " + std::to_string(s));
  }
  action_space().CheckJointAction(ja);
}

bool Environment::CountStepAgainstHorizon() {
  ++steps_this_episode_;
  return episode_horizon() > 0 && steps_this_episode_ >= episode_horizon();
}

std::vector<std::pair<StateId, JointAction>> EnumerateStateJointActions(const Environment& env) {
  std::vector<std::pair<StateId, JointAction>> out;
  const JointActionSpace& space = env.action_space();
  out.reserve(static_cast<size_t>(env.num_states()) * space.joint_size());
  for (StateId s = 0; s < env.num_states(); ++s) {
    for (long idx = 0; idx < space.joint_size(); ++idx) {
      out.emplace_back(s, space.FromJointIndex(idx));
    }
  }
  return out;
}

}  // namespace matlql
