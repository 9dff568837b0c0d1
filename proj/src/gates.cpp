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

#include "chandisc/gates.hpp"

#include <map>

namespace chandisc {

UnitaryGate::UnitaryGate(MatrixXcd m, double tol) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
    throw std::invalid_argument("UnitaryGate: square matrix required");
  const long d = matrix.rows();
  const double dev = (matrix * matrix.adjoint() - MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > tol)
    throw std::invalid_argument("UnitaryGate: unitarity check failed (deviation " +
                                std::to_string(dev) + ")");
}

UnitaryGate principal_sqrt(const UnitaryGate& u) {
  const long d = u.dim();
  Eigen::ComplexSchur<MatrixXcd> schur(u.matrix);
  if (schur.info() != Eigen::Success)
    throw std::runtime_error("principal_sqrt: eigendecomposition failure");
  MatrixXcd t = schur.matrixT();
  const MatrixXcd& q = schur.matrixU();
  double offdiag = 0.0;
  for (long c = 0; c < d; ++c)
    for (long r = 0; r < c; ++r) offdiag = std::max(offdiag, std::abs(t(r, c)));
  if (offdiag > 1e-10)
    throw std::runtime_error("principal_sqrt: input is not normal");
  VectorXcd roots(d);
  for (long i = 0; i < d; ++i) {
    const double theta = std::atan2(t(i, i).imag(), t(i, i).real());
    const double mag = std::sqrt(std::abs(t(i, i)));
    roots(i) = std::polar(mag, theta / 2.0);
  }
  MatrixXcd s = q * roots.asDiagonal() * q.adjoint();
  UnitaryGate out(std::move(s), 1e-10);
  if ((out.matrix * out.matrix - u.matrix).cwiseAbs().maxCoeff() > 1e-10)
    throw std::runtime_error("principal_sqrt: square check failed");
  return out;
}

namespace {

MatrixXcd base_gate(const std::string& tok) {
  MatrixXcd m(2, 2);
  const double r2 = 1.0 / std::sqrt(2.0);
  if (tok == "I")
    m = MatrixXcd::Identity(2, 2);
  else if (tok == "X")
    m << 0, 1, 1, 0;
  else if (tok == "Y")
    m << 0, Complex(0, -1), Complex(0, 1), 0;
  else if (tok == "Z")
    m << 1, 0, 0, -1;
  else if (tok == "H")
    m << r2, r2, r2, -r2;
  else if (tok == "Hy")
    // |+_y><0| + |-_y><1|
    m << r2, r2, Complex(0, r2), Complex(0, -r2);
  else if (tok == "Hp")
    // |+_P><0| + |-_P><1| with |+_P> = (3|0> + 4|1>)/5
    m << 0.6, 0.8, 0.8, -0.6;
  else
    throw std::invalid_argument("named_gate: unknown name '" + tok + "'");
  return m;
}

}  // namespace

UnitaryGate named_gate(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("named_gate: empty name");
  static const std::vector<std::string> tokens = {"sqrtHy", "sqrtHp", "sqrtX", "sqrtY",
                                                  "sqrtZ",  "Hy",     "Hp",   "I",
                                                  "X",      "Y",      "Z",    "H"};
  MatrixXcd acc = MatrixXcd::Identity(2, 2);
  std::size_t pos = 0;
  while (pos < name.size()) {
    bool matched = false;
    for (const auto& tok : tokens) {
      if (name.compare(pos, tok.size(), tok) == 0) {
        MatrixXcd g;
        if (tok.rfind("sqrt", 0) == 0)
          g = principal_sqrt(UnitaryGate(base_gate(tok.substr(4)))).matrix;
        else
          g = base_gate(tok);
        acc = acc * g;
        pos += tok.size();
        matched = true;
        break;
      }
    }
    if (!matched)
      throw std::invalid_argument("named_gate: unknown name '" + name + "'");
  }
  return UnitaryGate(std::move(acc));
}

LabeledOperator choi_of_unitary(const UnitaryGate& u, const SpaceLabel& in,
                                const SpaceLabel& out) {
  const long d = u.dim();
  if (in.dim != d || out.dim != d)
    throw std::invalid_argument("choi_of_unitary: label dims must match the gate");
  VectorXcd ket(d * d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) ket(i * d + j) = u.matrix(j, i);
  return LabeledOperator(Layout({in, out}), ket * ket.adjoint());
}

UnitaryGate haar_sample(int dim, Prng& rng) {
  if (dim < 2) throw std::invalid_argument("haar_sample: dim must be >= 2");
  MatrixXcd g(dim, dim);
  for (int c = 0; c < dim; ++c)
    for (int r = 0; r < dim; ++r) g(r, c) = rng.complex_normal();
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd q = qr.householderQ();
  MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    Complex rd = r(i, i);
    Complex phase = (std::abs(rd) > 0) ? rd / std::abs(rd) : Complex(1, 0);
    q.col(i) *= phase;
  }
  return UnitaryGate(std::move(q));
}

UnitaryGate haar_sample(int dim, std::uint64_t seed) {
  Prng rng(seed);
  return haar_sample(dim, rng);
}

}  // namespace chandisc
