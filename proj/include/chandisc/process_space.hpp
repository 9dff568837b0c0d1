// Copyright 2026 The chandisc authors
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

#pragma once

#include "chandisc/gates.hpp"

namespace chandisc {

/// Per-slot input/output dimensions of a k-slot process space.
struct SlotDims {
  int in = 0;
  int out = 0;
};

inline std::string input_label_name(int slot) { return "I" + std::to_string(slot + 1); }
inline std::string output_label_name(int slot) { return "O" + std::to_string(slot + 1); }

/// Canonical process layout [I1..Ik, O1..Ok]: inputs first, then outputs.
inline Layout canonical_process_layout(const std::vector<SlotDims>& slots) {
  std::vector<SpaceLabel> labels;
  for (std::size_t j = 0; j < slots.size(); ++j)
    labels.emplace_back(input_label_name(static_cast<int>(j)), slots[j].in, Role::Input);
  for (std::size_t j = 0; j < slots.size(); ++j)
    labels.emplace_back(output_label_name(static_cast<int>(j)), slots[j].out, Role::Output);
  return Layout(labels);
}

inline std::vector<SlotDims> uniform_slots(int d, int k) {
  return std::vector<SlotDims>(static_cast<std::size_t>(k), SlotDims{d, d});
}

/// |U>><<U|^{(x)k} arranged on the canonical layout [I1..Ik, O1..Ok].
inline LabeledOperator choi_power_canonical(const UnitaryGate& u, int k) {
  const int d = u.dim();
  LabeledOperator acc = choi_of_unitary(u, SpaceLabel(input_label_name(0), d, Role::Input),
                                        SpaceLabel(output_label_name(0), d, Role::Output));
  for (int j = 1; j < k; ++j)
    acc = tensor(acc, choi_of_unitary(u, SpaceLabel(input_label_name(j), d, Role::Input),
                                      SpaceLabel(output_label_name(j), d, Role::Output)));
  std::vector<std::string> order;
  for (int j = 0; j < k; ++j) order.push_back(input_label_name(j));
  for (int j = 0; j < k; ++j) order.push_back(output_label_name(j));
  return acc.permuted(order);
}

}  // namespace chandisc
