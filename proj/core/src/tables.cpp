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

#include "matlql/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace matlql {

QTable::QTable(int num_states, long others_size, int num_slots, double init)
    : num_states_(num_states),
      others_size_(others_size),
      num_slots_(num_slots),
      values_(static_cast<size_t>(num_states) * others_size * num_slots, init) {
  if (num_states <= 0 || others_size <= 0 || num_slots <= 0) {
    throw ContractViolation("QTable dimensions must be positive");
  }
}

double QTable::MaxOverSlots(StateId s, long others_key) const {
  return Get(s, others_key, ArgmaxSlot(s, others_key));
}

int QTable::ArgmaxSlot(StateId s, long others_key) const {
  int best = 0;
  double best_v = Get(s, others_key, 0);
  for (int slot = 1; slot < num_slots_; ++slot) {
    double v = Get(s, others_key, slot);
    if (v > best_v) {
      best_v = v;
      best = slot;
    }
  }
  return best;
}

double QTable::SupNorm() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::fabs(v));
  return m;
}

double QTable::SupDiff(const QTable& other) const {
  double m = 0.0;
  for (size_t i = 0; i < values_.size(); ++i) {
    m = std::max(m, std::fabs(values_[i] - other.values_[i]));
  }
  return m;
}

void QTable::Fill(double v) { std::fill(values_.begin(), values_.end(), v); }

std::string FormatValue(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void QTable::AppendCheckpointLines(std::string_view tag, std::vector<std::string>* out) const {
  for (StateId s = 0; s < num_states_; ++s) {
    for (long ok = 0; ok < others_size_; ++ok) {
      for (int slot = 0; slot < num_slots_; ++slot) {
        std::string line(tag);
        line += ' ';
        line += std::to_string(s);
        line += ' ';
        line += std::to_string(ok);
        line += ' ';
        line += std::to_string(slot);
        line += ' ';
        line += FormatValue(Get(s, ok, slot));
        out->push_back(std::move(line));
      }
    }
  }
}

QTable QTable::FromCheckpointLines(const std::vector<std::string>& lines, std::string_view tag) {
  struct Entry {
    StateId s;
    long ok;
    int slot;
    double v;
  };
  std::vector<Entry> entries;
  int max_s = -1, max_slot = -1;
  long max_ok = -1;
  for (const auto& line : lines) {
    std::istringstream in(line);
    std::string line_tag;
    Entry e;
    if (!(in >> line_tag)) continue;
    if (line_tag != tag) continue;
    if (!(in >> e.s >> e.ok >> e.slot >> e.v)) {
      throw ConfigError("malformed checkpoint line: " + line);
    }
    max_s = std::max(max_s, e.s);
    max_ok = std::max(max_ok, e.ok);
    max_slot = std::max(max_slot, e.slot);
    entries.push_back(e);
  }
  if (entries.empty()) {
    throw ConfigError("checkpoint has no lines tagged " + std::string(tag));
  }
  QTable table(max_s + 1, max_ok + 1, max_slot + 1);
  for (const auto& e : entries) table.Set(e.s, e.ok, e.slot, e.v);
  return table;
}

std::string JoinCheckpointLines(std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

}  // namespace matlql
