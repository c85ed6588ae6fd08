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

#ifndef MATLQL_ADVISORS_HPP_
#define MATLQL_ADVISORS_HPP_

#include <memory>
#include <string>
#include <vector>

#include "matlql/env.hpp"
#include "matlql/gridworld.hpp"
#include "matlql/rng.hpp"
#include "matlql/tables.hpp"

namespace matlql {

// One executed transition, as shown to an advisor after every step.
struct TransitionView {
  StateId state;
  const JointAction& joint_action;
  const std::vector<double>& rewards;
  StateId next_state;
  bool terminal;
};

// An action recommender queried by an agent at each state. Fixed advisors
// are stateless between calls and safe to share; learning wrappers and
// snapshot advisors are single-owner.
class Advisor {
 public:
  virtual ~Advisor() = default;

  virtual ActionId Recommend(StateId s, AgentId agent, Rng& rng) = 0;
  // Optional hook; fixed advisors ignore it.
  virtual void Observe(const TransitionView& /*t*/) {}
  virtual std::string Describe() const = 0;
  // Number of queries answered by the uniform fallback (snapshot advisors).
  virtual long fallback_count() const { return 0; }
};

// Always recommends the same action.
class AlwaysAdvisor : public Advisor {
 public:
  explicit AlwaysAdvisor(ActionId action) : action_(action) {}
  ActionId Recommend(StateId, AgentId, Rng&) override { return action_; }
  std::string Describe() const override { return "always:" + std::to_string(action_); }

 private:
  ActionId action_;
};

class UniformRandomAdvisor : public Advisor {
 public:
  explicit UniformRandomAdvisor(int num_actions) : num_actions_(num_actions) {}
  ActionId Recommend(StateId, AgentId, Rng& rng) override { return rng.UniformInt(num_actions_); }
  std::string Describe() const override { return "random"; }

 private:
  int num_actions_;
};

// Follows the inner advisor with probability p, otherwise recommends a
// uniformly random action. NoisyAdvisor(1, inner) is exactly `inner`.
class NoisyAdvisor : public Advisor {
 public:
  NoisyAdvisor(double p, std::unique_ptr<Advisor> inner, int num_actions);
  ActionId Recommend(StateId s, AgentId agent, Rng& rng) override;
  void Observe(const TransitionView& t) override { inner_->Observe(t); }
  std::string Describe() const override;

 private:
  double p_;
  std::unique_ptr<Advisor> inner_;
  int num_actions_;
};

// Grid-geometry rule: move to minimize (chase) or maximize (avoid) the
// Manhattan distance to the agent's target entity. Ties break toward the
// lowest action index.
class GridRuleAdvisor : public Advisor {
 public:
  enum class Rule { kChase, kAvoid };
  GridRuleAdvisor(const GridworldEnv& grid, Rule rule) : grid_(grid), rule_(rule) {}
  ActionId Recommend(StateId s, AgentId agent, Rng&) override;
  std::string Describe() const override { return rule_ == Rule::kChase ? "chase" : "avoid"; }

 private:
  const GridworldEnv& grid_;
  Rule rule_;
};

// Greedy play from a frozen low-level Q snapshot. The snapshot keys on
// (state, others, own action); the others slot is resolved from the last
// observed actions of the other agents. States outside the snapshot fall
// back to a uniformly random action and are counted.
class QSnapshotAdvisor : public Advisor {
 public:
  QSnapshotAdvisor(QTable snapshot, AgentId owner, const JointActionSpace& space);

  ActionId Recommend(StateId s, AgentId agent, Rng& rng) override;
  void Observe(const TransitionView& t) override;
  std::string Describe() const override { return "q-snapshot"; }
  long fallback_count() const override { return fallbacks_; }

 private:
  QTable snapshot_;
  AgentId owner_;
  const JointActionSpace& space_;
  JointAction last_actions_;
  long fallbacks_ = 0;
};

// Wraps an independent Q-learner that keeps training from the transitions
// it observes while advising.
class LearningAdvisor : public Advisor {
 public:
  LearningAdvisor(int num_states, int num_actions, AgentId owner, double alpha, double gamma);

  ActionId Recommend(StateId s, AgentId agent, Rng&) override;
  void Observe(const TransitionView& t) override;
  std::string Describe() const override { return "learning"; }
  const QTable& table() const { return table_; }

 private:
  QTable table_;
  AgentId owner_;
  double alpha_;
  double gamma_;
};

}  // namespace matlql

#endif  // MATLQL_ADVISORS_HPP_
