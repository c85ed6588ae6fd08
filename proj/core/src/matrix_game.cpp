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

#include "matlql/matrix_game.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace matlql {

void MatrixGameSpec::SetDeterministicSuccessor(StateId s, long joint_index, StateId next) {
  successors[s][joint_index] = {{next, 1.0}};
}

MatrixGameEnv::MatrixGameEnv(MatrixGameSpec spec)
    : spec_(std::move(spec)), space_(spec_.action_sizes) {
  std::vector<std::string> issues;
  if (spec_.num_states <= 0) issues.push_back("matrix game needs at least one state");
  if (static_cast<int>(spec_.rewards.size()) != spec_.num_states) {
    issues.push_back("reward tensor count does not match state count");
  }
  for (const auto& per_state : spec_.rewards) {
    if (static_cast<long>(per_state.size()) != space_.joint_size()) {
      issues.push_back("reward tensor shape does not match joint action space");
      break;
    }
    for (const auto& per_joint : per_state) {
      if (static_cast<int>(per_joint.size()) != space_.num_agents()) {
        issues.push_back("reward entry arity does not match agent count");
        break;
      }
      for (double r : per_joint) reward_bound_ = std::max(reward_bound_, std::fabs(r));
    }
  }
  if (spec_.successors.empty()) {
    spec_.successors.assign(spec_.num_states,
                            std::vector<std::vector<Successor>>(space_.joint_size()));
  }
  if (static_cast<int>(spec_.successors.size()) != spec_.num_states) {
    issues.push_back("successor table does not match state count");
  }
  if (spec_.gamma < 0.0 || spec_.gamma >= 1.0) issues.push_back("discount must be in [0, 1)");
  if (!issues.empty()) throw ConfigError(issues);
  if (reward_bound_ == 0.0) reward_bound_ = 1.0;
}

bool MatrixGameEnv::IsTerminal(StateId s) const {
  return !spec_.terminal.empty() && spec_.terminal[s];
}

StateId MatrixGameEnv::Reset(Rng& /*rng*/) {
  ResetHorizonCounter();
  return spec_.start;
}

StepOutcome MatrixGameEnv::Step(StateId s, const JointAction& ja, Rng& rng) {
  CheckStepPreconditions(s, ja);
  long idx = space_.JointIndex(ja);
  StepOutcome out;
  out.rewards = spec_.rewards[s][idx];
  const auto& dist = spec_.successors[s][idx];
  if (dist.empty()) {
    out.next_state = s;
  } else if (dist.size() == 1) {
    out.next_state = dist[0].state;
  } else {
    double u = rng.Uniform();
    double acc = 0.0;
    out.next_state = dist.back().state;
    for (const auto& succ : dist) {
      acc += succ.probability;
      if (u < acc) {
        out.next_state = succ.state;
        break;
      }
    }
  }
  bool capped = CountStepAgainstHorizon();
  out.terminal = IsTerminal(out.next_state) || capped;
  return out;
}

std::vector<double> MatrixGameEnv::ExpectedRewards(StateId s, const JointAction& ja) const {
  return spec_.rewards[s][space_.JointIndex(ja)];
}

std::vector<EnumerableModel::Successor> MatrixGameEnv::Transitions(StateId s,
                                                                   const JointAction& ja) const {
  const auto& dist = spec_.successors[s][space_.JointIndex(ja)];
  if (dist.empty()) return {{s, 1.0}};
  return dist;
}

namespace {

std::vector<std::string> Tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

MatrixGameSpec ParseMatrixGameText(const std::string& text, double gamma, int horizon) {
  struct Row {
    JointAction actions;
    std::vector<double> rewards;
  };
  std::vector<Row> rows;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  size_t num_agents = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    auto colon = std::find(tokens.begin(), tokens.end(), ":");
    if (colon == tokens.end()) {
      throw ConfigError("matrix file line " + std::to_string(line_no) + ": missing ':'");
    }
    Row row;
    for (auto it = tokens.begin(); it != colon; ++it) row.actions.push_back(std::stoi(*it));
    for (auto it = colon + 1; it != tokens.end(); ++it) row.rewards.push_back(std::stod(*it));
    if (num_agents == 0) num_agents = row.actions.size();
    if (row.actions.size() != num_agents || row.rewards.size() != num_agents) {
      throw ConfigError("matrix file line " + std::to_string(line_no) +
                        ": expected " + std::to_string(num_agents) +
                        " actions and as many rewards");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("matrix file has no payoff lines");

  MatrixGameSpec spec;
  spec.gamma = gamma;
  spec.horizon = horizon;
  spec.action_sizes.assign(num_agents, 0);
  for (const auto& row : rows) {
    for (size_t j = 0; j < num_agents; ++j) {
      if (row.actions[j] < 0) throw ConfigError("matrix file: negative action index");
      spec.action_sizes[j] = std::max(spec.action_sizes[j], row.actions[j] + 1);
    }
  }
  JointActionSpace space(spec.action_sizes);
  spec.num_states = 1;
  spec.rewards.assign(1, std::vector<std::vector<double>>(space.joint_size()));
  std::vector<bool> seen(space.joint_size(), false);
  for (const auto& row : rows) {
    long idx = space.JointIndex(row.actions);
    if (seen[idx]) throw ConfigError("matrix file: duplicate joint action line");
    seen[idx] = true;
    spec.rewards[0][idx] = row.rewards;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
    throw ConfigError("matrix file: not every joint action is covered");
  }
  return spec;
}

MatrixGameSpec LoadMatrixGameFile(const std::string& path, double gamma, int horizon) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open matrix game file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  MatrixGameSpec spec = ParseMatrixGameText(buffer.str(), gamma, horizon);
  spec.label = "matrix-game:" + path;
  return spec;
}

MatrixGameSpec MakeCoordination2x2(double best_reward, double gamma, int horizon) {
  MatrixGameSpec spec;
  spec.action_sizes = {2, 2};
  spec.gamma = gamma;
  spec.horizon = horizon;
  spec.rewards = {{{best_reward, best_reward}, {0, 0}, {0, 0}, {0, 0}}};
  spec.label = "coordination-2x2";
  return spec;
}

MatrixGameSpec MakeCooperativeChain3(double gamma) {
  // Joint index order over (a0, a1): (0,0) (0,1) (1,0) (1,1). Each state has
  // a unique best joint action; successors mix all three states.
  MatrixGameSpec spec;
  spec.action_sizes = {2, 2};
  spec.num_states = 3;
  spec.gamma = gamma;
  spec.horizon = 0;
  spec.label = "coop-chain-3";
  auto identical = [](double r) { return std::vector<double>{r, r}; };
  spec.rewards = {
      {identical(1.0), identical(0.2), identical(0.3), identical(0.5)},
      {identical(0.1), identical(0.9), identical(0.4), identical(0.2)},
      {identical(0.3), identical(0.1), identical(0.2), identical(0.8)},
  };
  spec.successors.assign(3, std::vector<std::vector<EnumerableModel::Successor>>(4));
  JointActionSpace space(spec.action_sizes);
  for (StateId s = 0; s < 3; ++s) {
    for (long idx = 0; idx < 4; ++idx) {
      JointAction ja = space.FromJointIndex(idx);
      StateId next = (s + 1 + (ja[0] == ja[1] ? 0 : 1)) % 3;
      spec.SetDeterministicSuccessor(s, idx, next);
    }
  }
  return spec;
}

MatrixGameSpec MakeMatchingPennies(double gamma, int horizon) {
  MatrixGameSpec spec;
  spec.action_sizes = {2, 2};
  spec.gamma = gamma;
  spec.horizon = horizon;
  spec.rewards = {{{1, -1}, {-1, 1}, {-1, 1}, {1, -1}}};
  spec.label = "matching-pennies";
  return spec;
}

}  // namespace matlql
