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

#include "chandisc/labeled_operator.hpp"
#include "chandisc/rng.hpp"

namespace chandisc {

/// A unitary operator; unitarity is validated at construction.
struct UnitaryGate {
  MatrixXcd matrix;

  UnitaryGate() = default;
  explicit UnitaryGate(MatrixXcd m, double tol = 1e-12);

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Principal square root of a unitary: eigenphases are halved on the branch
/// arg in (-pi, pi], so sqrt(sz) = diag(1, i).
UnitaryGate principal_sqrt(const UnitaryGate& u);

/// Named single-qubit gates: I, X, Y, Z, H, Hy, Hp, their sqrt* variants, and
/// concatenations thereof parsed greedily from the left ("XH" = X * H).
UnitaryGate named_gate(const std::string& name);

/// |U>><<U| on [in, out], where |U>> = sum_i (1 (x) U)|ii>.
LabeledOperator choi_of_unitary(const UnitaryGate& u, const SpaceLabel& in,
                                const SpaceLabel& out);

/// Haar-random unitary: QR of a complex Ginibre matrix with the R-diagonal
/// phase correction.
UnitaryGate haar_sample(int dim, Prng& rng);
UnitaryGate haar_sample(int dim, std::uint64_t seed);

}  // namespace chandisc
