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

#ifndef MATLQL_TYPES_HPP_
#define MATLQL_TYPES_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matlql {

// Indices into the enumerable state set, an agent's action space, the agent
// roster, and an agent's advisor roster. All are small non-negative integers.
using StateId = int;
using ActionId = int;
using AgentId = int;
using AdvisorId = int;

inline constexpr AdvisorId kNoAdvisor = -1;

// One action per agent, in agent order.
using JointAction = std::vector<ActionId>;

// Result of executing a joint action: successor state, one reward per agent,
// and whether the episode ended (either a terminal state was entered or the
// episode step cap was hit).
struct StepOutcome {
  StateId next_state = 0;
  std::vector<double> rewards;
  bool terminal = false;
};

// A precondition of the environment or learner API was violated by the
// caller (e.g. stepping from a terminal state, malformed joint action).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Invalid configuration. Carries the full list of violated fields so a
// single validation pass can report everything at once.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> issues)
      : std::runtime_error(Join(issues)), issues_(std::move(issues)) {}
  explicit ConfigError(const std::string& issue)
      : ConfigError(std::vector<std::string>{issue}) {}

  const std::vector<std::string>& issues() const { return issues_; }

 private:
  static std::string Join(const std::vector<std::string>& issues) {
    std::string out = "configuration error:";
    for (const auto& s : issues) {
      out += "\n  - " + s;
    }
    return out;
  }
  std::vector<std::string> issues_;
};

// Mixed-radix indexing over joint actions. Canonical order is lexicographic
// with agent 0 as the most significant digit.
class JointActionSpace {
 public:
  explicit JointActionSpace(std::vector<int> sizes);

  int num_agents() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& sizes() const { return sizes_; }
  int size(AgentId agent) const { return sizes_[agent]; }

  // Product of all action-space sizes.
  long joint_size() const { return joint_size_; }
  // Product of the action-space sizes of everyone except `skip`.
  long others_size(AgentId skip) const;

  long JointIndex(const JointAction& ja) const;
  long OthersIndex(const JointAction& ja, AgentId skip) const;
  JointAction FromJointIndex(long index) const;

  void CheckJointAction(const JointAction& ja) const;

 private:
  std::vector<int> sizes_;
  long joint_size_ = 1;
};

}  // namespace matlql

#endif  // MATLQL_TYPES_HPP_
