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

#ifndef MATLQL_TABLES_HPP_
#define MATLQL_TABLES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "matlql/types.hpp"

namespace matlql {

// Dense tabular value function keyed by (state, others-joint-action index,
// slot). The slot axis holds own actions for low-level tables and advisor
// ids for high-level tables; environments with one agent (or learners that
// ignore joint actions) use others_size == 1.
class QTable {
 public:
  QTable() : QTable(1, 1, 1) {}
  QTable(int num_states, long others_size, int num_slots, double init = 0.0);

  int num_states() const { return num_states_; }
  long others_size() const { return others_size_; }
  int num_slots() const { return num_slots_; }

  double Get(StateId s, long others_key, int slot) const { return values_[Offset(s, others_key, slot)]; }
  void Set(StateId s, long others_key, int slot, double v) { values_[Offset(s, others_key, slot)] = v; }
  double& At(StateId s, long others_key, int slot) { return values_[Offset(s, others_key, slot)]; }

  // Maximum over slots; ties broken toward the lowest slot index.
  double MaxOverSlots(StateId s, long others_key) const;
  int ArgmaxSlot(StateId s, long others_key) const;

  double SupNorm() const;
  double SupDiff(const QTable& other) const;
  void Fill(double v);

  bool operator==(const QTable& other) const = default;

  // One line per entry, "TAG s others_key slot value" with the value printed
  // to 17 significant digits, so a round trip is bit-exact.
  void AppendCheckpointLines(std::string_view tag, std::vector<std::string>* out) const;

  // Rebuilds a table from the matching lines; dimensions are inferred from
  // the largest indices present.
  static QTable FromCheckpointLines(const std::vector<std::string>& lines, std::string_view tag);

 private:
  size_t Offset(StateId s, long others_key, int slot) const {
    return (static_cast<size_t>(s) * others_size_ + others_key) * num_slots_ + slot;
  }

  int num_states_;
  long others_size_;
  int num_slots_;
  std::vector<double> values_;
};

// Visit statistics backing the vote weights and the per-pair learning
// rates. `state_visits` counts arrivals at a state; `pair_visits` counts
// executions of a full joint action at a state.
struct VisitCounters {
  VisitCounters() = default;
  VisitCounters(int num_states, long joint_size)
      : state_visits(num_states, 0), pair_visits(static_cast<size_t>(num_states) * joint_size, 0),
        joint_size(joint_size) {}

  long StateVisits(StateId s) const { return state_visits[s]; }
  long PairVisits(StateId s, long joint_index) const {
    return pair_visits[static_cast<size_t>(s) * joint_size + joint_index];
  }
  void VisitState(StateId s) { ++state_visits[s]; }
  long VisitPair(StateId s, long joint_index) {
    return ++pair_visits[static_cast<size_t>(s) * joint_size + joint_index];
  }

  std::vector<long> state_visits;
  std::vector<long> pair_visits;
  long joint_size = 1;
};

// Formats a double with 17 significant digits (shortest bit-exact form).
std::string FormatValue(double v);

// Joins checkpoint lines after sorting them lexicographically.
std::string JoinCheckpointLines(std::vector<std::string> lines);
std::vector<std::string> SplitLines(const std::string& text);

}  // namespace matlql

#endif  // MATLQL_TABLES_HPP_
