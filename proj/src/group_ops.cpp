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

#include "chandisc/group_ops.hpp"

#include "chandisc/process_space.hpp"

namespace chandisc {

bool phase_equivalent(const MatrixXcd& a, const MatrixXcd& b, double tol) {
  if (a.rows() != b.rows()) return false;
  const double d = static_cast<double>(a.rows());
  return std::abs(std::abs((a.adjoint() * b).trace()) - d) <= tol * d;
}

int phase_index(const std::vector<UnitaryGate>& gates, const MatrixXcd& m, double tol) {
  for (std::size_t i = 0; i < gates.size(); ++i)
    if (phase_equivalent(gates[i].matrix, m, tol)) return static_cast<int>(i);
  return -1;
}

bool is_group_up_to_phase(const std::vector<UnitaryGate>& gates, double tol) {
  if (gates.empty()) throw std::invalid_argument("is_group_up_to_phase: empty set");
  const int d = gates[0].dim();
  for (const auto& g : gates)
    if (g.dim() != d) throw std::invalid_argument("is_group_up_to_phase: mixed dims");

  if (phase_index(gates, MatrixXcd::Identity(d, d), tol) < 0) return false;
  for (const auto& g : gates)
    if (phase_index(gates, g.matrix.adjoint(), tol) < 0) return false;
  for (const auto& a : gates)
    for (const auto& b : gates)
      if (phase_index(gates, a.matrix * b.matrix, tol) < 0) return false;
  return true;
}

std::vector<std::vector<int>> group_table(const std::vector<UnitaryGate>& gates, double tol) {
  const std::size_t n = gates.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = phase_index(gates, gates[i].matrix * gates[j].matrix, tol);
      if (table[i][j] < 0)
        throw std::invalid_argument("group_table: set not closed under products mod phase");
    }
  return table;
}

std::vector<UnitaryGate> pauli_gates() {
  return {named_gate("I"), named_gate("X"), named_gate("Y"), named_gate("Z")};
}

namespace {

std::vector<UnitaryGate> close_under_products(std::vector<MatrixXcd> gens,
                                              std::size_t expected_max) {
  std::vector<UnitaryGate> group;
  group.emplace_back(MatrixXcd::Identity(gens[0].rows(), gens[0].cols()));
  for (auto& g : gens)
    if (phase_index(group, g) < 0) group.emplace_back(std::move(g));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = group.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        MatrixXcd p = group[i].matrix * group[j].matrix;
        if (phase_index(group, p) < 0) {
          group.emplace_back(std::move(p));
          grew = true;
          if (group.size() > expected_max)
            throw std::runtime_error("close_under_products: closure exceeded bound");
        }
      }
  }
  return group;
}

}  // namespace

std::vector<UnitaryGate> qubit_clifford() {
  MatrixXcd h = named_gate("H").matrix;
  MatrixXcd s(2, 2);
  s << 1, 0, 0, Complex(0, 1);
  return close_under_products({h, s}, 24);
}

std::vector<UnitaryGate> qutrit_clifford() {
  const Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
  MatrixXcd f(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) f(r, c) = std::pow(w, r * c) / std::sqrt(3.0);
  MatrixXcd p = MatrixXcd::Zero(3, 3);
  p(0, 0) = 1;
  p(1, 1) = 1;
  p(2, 2) = w;
  return close_under_products({f, p}, 216);
}

MatrixXcd kron_pow(const MatrixXcd& m, int k) {
  MatrixXcd acc = MatrixXcd::Ones(1, 1);
  for (int i = 0; i < k; ++i) {
    MatrixXcd next(acc.rows() * m.rows(), acc.cols() * m.cols());
    for (long r = 0; r < acc.rows(); ++r)
      for (long c = 0; c < acc.cols(); ++c)
        next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = acc(r, c) * m;
    acc = std::move(next);
  }
  return acc;
}

MatrixXcd twirl_superop(const std::vector<UnitaryGate>& gates, int k) {
  const long dk = static_cast<long>(std::pow(gates[0].dim(), k));
  MatrixXcd acc = MatrixXcd::Zero(dk * dk, dk * dk);
  for (const auto& g : gates) {
    MatrixXcd uk = kron_pow(g.matrix, k);
    MatrixXcd ukc = uk.conjugate();
    for (long r = 0; r < dk; ++r)
      for (long c = 0; c < dk; ++c)
        acc.block(r * dk, c * dk, dk, dk) += uk(r, c) * ukc;
  }
  return acc / static_cast<double>(gates.size());
}

const std::vector<UnitaryGate>& reference_design(int d, int k) {
  static const std::vector<UnitaryGate> pauli = pauli_gates();
  static const std::vector<UnitaryGate> cliff2 = qubit_clifford();
  static const std::vector<UnitaryGate> cliff3 = qutrit_clifford();
  if (d == 2 && k == 1) return pauli;
  if (d == 2 && (k == 2 || k == 3)) return cliff2;
  if (d == 3 && (k == 1 || k == 2)) return cliff3;
  throw std::invalid_argument("reference_design: unsupported (dim, k) = (" + std::to_string(d) +
                              ", " + std::to_string(k) + ")");
}

bool is_k_design(const std::vector<UnitaryGate>& gates, int k, double tol) {
  if (!is_group_up_to_phase(gates))
    throw std::invalid_argument("is_k_design: gates do not form a group up to phase");
  const int d = gates[0].dim();
  const auto& ref = reference_design(d, k);
  MatrixXcd lhs = twirl_superop(gates, k);
  MatrixXcd rhs = twirl_superop(ref, k);
  return (lhs - rhs).cwiseAbs().maxCoeff() <= tol;
}

LabeledOperator haar_twirl_process(int d, int k) {
  const auto& ref = reference_design(d, k);
  Layout layout = canonical_process_layout(uniform_slots(d, k));
  MatrixXcd acc = MatrixXcd::Zero(layout.total_dim(), layout.total_dim());
  for (const auto& g : ref) acc += choi_power_canonical(g, k).matrix();
  return LabeledOperator(layout, acc / static_cast<double>(ref.size()));
}

}  // namespace chandisc
