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

/// |Tr(A^dag B)| = d within tol, i.e. A and B implement the same channel.
bool phase_equivalent(const MatrixXcd& a, const MatrixXcd& b, double tol = 1e-9);

/// Index of the element of `gates` phase-equivalent to m, or -1.
int phase_index(const std::vector<UnitaryGate>& gates, const MatrixXcd& m, double tol = 1e-9);

/// Identity membership, product closure and inverse closure, all mod phase.
bool is_group_up_to_phase(const std::vector<UnitaryGate>& gates, double tol = 1e-9);

/// Multiplication table mod phase: table[i][j] = index of gates[i]*gates[j].
/// Throws if the set is not closed.
std::vector<std::vector<int>> group_table(const std::vector<UnitaryGate>& gates,
                                          double tol = 1e-9);

/// The single-qubit Pauli set {1, X, Y, Z}.
std::vector<UnitaryGate> pauli_gates();

/// Single-qubit Clifford group mod phase (24 elements), generated from {H, S}.
std::vector<UnitaryGate> qubit_clifford();

/// Single-qutrit Clifford group mod phase (216 elements), generated from the
/// Fourier and phase gates and closed by product enumeration.
std::vector<UnitaryGate> qutrit_clifford();

/// (1/N) sum_i U_i^{(x)k} (x) conj(U_i)^{(x)k}.
MatrixXcd twirl_superop(const std::vector<UnitaryGate>& gates, int k);

/// Exact reference design used for the Haar side: Pauli for (d=2, k=1),
/// qubit Clifford for (d=2, k<=3), qutrit Clifford for (d=3, k<=2).
const std::vector<UnitaryGate>& reference_design(int d, int k);

/// Group k-design test: the gates' twirl equals the Haar twirl within tol.
/// Requires is_group_up_to_phase; throws on unsupported (dim, k).
bool is_k_design(const std::vector<UnitaryGate>& gates, int k, double tol = 1e-9);

/// Haar average of |U>><<U|^{(x)k} on the canonical layout
/// [I1..Ik, O1..Ok]; PSD with trace d^k and non-signaling marginals.
LabeledOperator haar_twirl_process(int d, int k);

/// k-fold Kronecker power.
MatrixXcd kron_pow(const MatrixXcd& m, int k);

}  // namespace chandisc
