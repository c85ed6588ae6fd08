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

#include "matlql/advisors.hpp"

#include <algorithm>

namespace matlql {

NoisyAdvisor::NoisyAdvisor(double p, std::unique_ptr<Advisor> inner, int num_actions)
    : p_(p), inner_(std::move(inner)), num_actions_(num_actions) {
  if (p_ < 0.0 || p_ > 1.0) throw ConfigError("noisy advisor probability must be in [0, 1]");
}

ActionId NoisyAdvisor::Recommend(StateId s, AgentId agent, Rng& rng) {
  // Draw order is fixed: the noise coin first, then whatever the inner
  // advisor consumes, so traces are reproducible.
  double u = rng.Uniform();
  ActionId inner_action = inner_->Recommend(s, agent, rng);
  if (u < p_) return inner_action;
  return rng.UniformInt(num_actions_);
}

std::string NoisyAdvisor::Describe() const {
  return "noisy(" + std::to_string(p_) + "," + inner_->Describe() + ")";
}

ActionId GridRuleAdvisor::Recommend(StateId s, AgentId agent, Rng&) {
  int own = grid_.OwnCell(agent, s);
  int target = grid_.TargetCell(agent, s);
  int best_action = 0;
  int best_dist = grid_.Manhattan(grid_.MoveFrom(own, 0), target);
  for (ActionId a = 1; a < GridworldEnv::kNumActions; ++a) {
    int d = grid_.Manhattan(grid_.MoveFrom(own, a), target);
    bool better = rule_ == Rule::kChase ? d < best_dist : d > best_dist;
    if (better) {
      best_dist = d;
      best_action = a;
    }
  }
  return best_action;
}

QSnapshotAdvisor::QSnapshotAdvisor(QTable snapshot, AgentId owner, const JointActionSpace& space)
    : snapshot_(std::move(snapshot)),
      owner_(owner),
      space_(space),
      last_actions_(space.num_agents(), 0) {}

ActionId QSnapshotAdvisor::Recommend(StateId s, AgentId /*agent*/, Rng& rng) {
  if (s >= snapshot_.num_states()) {
    ++fallbacks_;
    return rng.UniformInt(space_.size(owner_));
  }
  long ok = 0;
  if (snapshot_.others_size() > 1) {
    ok = space_.OthersIndex(last_actions_, owner_);
    if (ok >= snapshot_.others_size()) ok = 0;
  }
  return snapshot_.ArgmaxSlot(s, ok);
}

void QSnapshotAdvisor::Observe(const TransitionView& t) { last_actions_ = t.joint_action; }

LearningAdvisor::LearningAdvisor(int num_states, int num_actions, AgentId owner, double alpha,
                                 double gamma)
    : table_(num_states, 1, num_actions), owner_(owner), alpha_(alpha), gamma_(gamma) {}

ActionId LearningAdvisor::Recommend(StateId s, AgentId /*agent*/, Rng&) {
  return table_.ArgmaxSlot(s, 0);
}

void LearningAdvisor::Observe(const TransitionView& t) {
  ActionId a = t.joint_action[owner_];
  double target = t.terminal ? t.rewards[owner_]
                             : t.rewards[owner_] + gamma_ * table_.MaxOverSlots(t.next_state, 0);
  double& q = table_.At(t.state, 0, a);
  q += alpha_ * (target - q);
}

}  // namespace matlql
