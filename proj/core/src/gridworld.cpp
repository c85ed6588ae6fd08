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

#include "matlql/gridworld.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace matlql {

GridworldEnv::GridworldEnv(GridworldSpec spec)
    : spec_(std::move(spec)),
      space_(std::vector<int>(2, kNumActions)),
      num_states_(0) {
  std::vector<std::string> issues;
  if (spec_.width <= 0 || spec_.height <= 0) issues.push_back("grid dimensions must be positive");
  int cells = spec_.width * spec_.height;
  int entities = spec_.mode == GridMode::kDuel ? 2 : 3;
  if (spec_.start_cells.empty()) {
    // Defaults: opposite corners, evader in the middle.
    spec_.start_cells = spec_.mode == GridMode::kDuel ? std::vector<int>{0, cells - 1}
                                                      : std::vector<int>{0, cells - 1, cells / 2};
  }
  if (static_cast<int>(spec_.start_cells.size()) != entities) {
    issues.push_back("start_cells must list " + std::to_string(entities) + " cells");
  } else {
    for (int c : spec_.start_cells) {
      if (c < 0 || c >= cells) issues.push_back("start cell out of grid");
    }
  }
  if (!issues.empty()) throw ConfigError(issues);

  num_states_ = 1;
  for (int i = 0; i < entities; ++i) num_states_ *= cells;
  if (spec_.mode == GridMode::kDuel) {
    if (spec_.start_cells[0] == spec_.start_cells[1]) {
      throw ConfigError("duel start cells coincide (terminal start)");
    }
  } else if (IsTerminal(EncodePursuit(spec_.start_cells[0], spec_.start_cells[1],
                                      spec_.start_cells[2]))) {
    throw ConfigError("pursuit start configuration is already a capture");
  }
}

std::string GridworldEnv::name() const {
  return spec_.mode == GridMode::kDuel ? "duel-grid" : "pursuit-grid";
}

double GridworldEnv::reward_bound() const {
  double event = spec_.mode == GridMode::kDuel
                     ? spec_.tag_reward
                     : std::max(spec_.capture_reward, spec_.pursuit_tag_reward);
  return event + std::fabs(spec_.step_penalty);
}

bool GridworldEnv::IsTerminal(StateId s) const {
  if (spec_.mode == GridMode::kDuel) {
    return OwnCell(0, s) == OwnCell(1, s);
  }
  int cells = num_cells();
  int evader = s % cells;
  int p1 = (s / cells) % cells;
  int p0 = s / (cells * cells);
  return PursuitCaptured(p0, p1, evader);
}

StateId GridworldEnv::Reset(Rng& /*rng*/) {
  ResetHorizonCounter();
  if (spec_.mode == GridMode::kDuel) {
    return EncodeDuel(spec_.start_cells[0], spec_.start_cells[1]);
  }
  return EncodePursuit(spec_.start_cells[0], spec_.start_cells[1], spec_.start_cells[2]);
}

StepOutcome GridworldEnv::Step(StateId s, const JointAction& ja, Rng& rng) {
  CheckStepPreconditions(s, ja);
  return spec_.mode == GridMode::kDuel ? StepDuel(s, ja) : StepPursuit(s, ja, rng);
}

int GridworldEnv::MoveFrom(int cell, ActionId action) const {
  int x = cell % spec_.width;
  int y = cell / spec_.width;
  switch (action) {
    case kUp: y -= 1; break;
    case kDown: y += 1; break;
    case kLeft: x -= 1; break;
    case kRight: x += 1; break;
    default: break;
  }
  x = std::clamp(x, 0, spec_.width - 1);
  y = std::clamp(y, 0, spec_.height - 1);
  return y * spec_.width + x;
}

int GridworldEnv::Manhattan(int a, int b) const {
  return std::abs(a % spec_.width - b % spec_.width) +
         std::abs(a / spec_.width - b / spec_.width);
}

int GridworldEnv::OwnCell(AgentId agent, StateId s) const {
  int cells = num_cells();
  if (spec_.mode == GridMode::kDuel) {
    return agent == 0 ? s / cells : s % cells;
  }
  return agent == 0 ? s / (cells * cells) : (s / cells) % cells;
}

int GridworldEnv::TargetCell(AgentId agent, StateId s) const {
  if (spec_.mode == GridMode::kDuel) return OwnCell(1 - agent, s);
  return s % num_cells();
}

StateId GridworldEnv::EncodeDuel(int tagger, int opponent) const {
  return tagger * num_cells() + opponent;
}

StateId GridworldEnv::EncodePursuit(int p0, int p1, int evader) const {
  int cells = num_cells();
  return (p0 * cells + p1) * cells + evader;
}

StepOutcome GridworldEnv::StepDuel(StateId s, const JointAction& ja) {
  int old_t = OwnCell(0, s);
  int old_o = OwnCell(1, s);
  int new_t = MoveFrom(old_t, ja[0]);
  int new_o = MoveFrom(old_o, ja[1]);

  StepOutcome out;
  bool tagged = new_t == new_o || new_t == old_o;
  bool capped = CountStepAgainstHorizon();
  if (tagged) {
    int catch_cell = new_t;
    out.next_state = EncodeDuel(catch_cell, catch_cell);
    out.rewards = {spec_.tag_reward + spec_.step_penalty, -spec_.tag_reward + spec_.step_penalty};
    out.terminal = true;
    return out;
  }
  out.next_state = EncodeDuel(new_t, new_o);
  out.rewards = {spec_.step_penalty, spec_.step_penalty};
  out.terminal = capped;
  return out;
}

bool GridworldEnv::PursuitCaptured(int p0, int p1, int evader) const {
  return Manhattan(p0, evader) <= 1 && Manhattan(p1, evader) <= 1;
}

StepOutcome GridworldEnv::StepPursuit(StateId s, const JointAction& ja, Rng& rng) {
  int cells = num_cells();
  int evader = s % cells;
  int old_p1 = (s / cells) % cells;
  int old_p0 = s / (cells * cells);

  // Scripted evader: uniformly random move, drawn before anything else so
  // the trajectory is a pure function of the rng stream.
  int new_e = MoveFrom(evader, rng.UniformInt(kNumActions));

  int new_p0 = MoveFrom(old_p0, ja[0]);
  int new_p1 = MoveFrom(old_p1, ja[1]);
  if (new_p0 == new_p1) {  // stay-on-collision
    new_p0 = old_p0;
    new_p1 = old_p1;
  }

  StepOutcome out;
  out.next_state = EncodePursuit(new_p0, new_p1, new_e);
  bool captured = PursuitCaptured(new_p0, new_p1, new_e);
  bool tagged = Manhattan(new_p0, new_e) <= 1 || Manhattan(new_p1, new_e) <= 1;
  double r = spec_.step_penalty;
  if (captured) {
    r += spec_.capture_reward;
  } else if (tagged) {
    r += spec_.pursuit_tag_reward;
  }
  bool capped = CountStepAgainstHorizon();
  out.rewards = {r, r};
  out.terminal = captured || capped;
  return out;
}

}  // namespace matlql
