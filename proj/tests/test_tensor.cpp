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

#include <doctest.h>

#include "chandisc/labeled_operator.hpp"
#include "chandisc/product_basis.hpp"
#include "test_util.hpp"

using namespace chandisc;
using namespace chandisc::testutil;

namespace {

MatrixXcd pauli_x() {
  MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
MatrixXcd pauli_z() {
  MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Unnormalized maximally entangled state sum_ij |ii><jj| on two labels.
LabeledOperator phi_plus(const SpaceLabel& a, const SpaceLabel& b) {
  const long d = a.dim;
  MatrixXcd m = MatrixXcd::Zero(d * d, d * d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0;
  return LabeledOperator(Layout({a, b}), std::move(m));
}

// |U>> <<U| on [in,out].
LabeledOperator choi_ket_of(const MatrixXcd& u, const SpaceLabel& in, const SpaceLabel& out) {
  const long d = u.rows();
  VectorXcd ket(d * d);
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) ket(i * d + j) = u(j, i);
  return LabeledOperator(Layout({in, out}), ket * ket.adjoint());
}

}  // namespace

TEST_CASE("tensor: identity, pauli blocks, projectors") {
  SpaceLabel A("A", 2), B("B", 2);
  auto ia = LabeledOperator::identity(Layout({A}));
  auto ib = LabeledOperator::identity(Layout({B}));
  auto t = tensor(ia, ib);
  CHECK(t.dim() == 4);
  CHECK((t.matrix() - MatrixXcd::Identity(4, 4)).norm() == doctest::Approx(0.0));

  auto sx = LabeledOperator(Layout({A}), pauli_x());
  auto sz = LabeledOperator(Layout({B}), pauli_z());
  auto xz = tensor(sx, sz);
  MatrixXcd expect(4, 4);
  expect << 0, 0, 1, 0,  //
      0, 0, 0, -1,       //
      1, 0, 0, 0,        //
      0, -1, 0, 0;
  CHECK((xz.matrix() - expect).norm() == doctest::Approx(0.0));

  MatrixXcd p0 = MatrixXcd::Zero(2, 2), p1 = MatrixXcd::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  auto proj = tensor(LabeledOperator(Layout({A}), p0), LabeledOperator(Layout({B}), p1));
  MatrixXcd e01 = MatrixXcd::Zero(4, 4);
  e01(1, 1) = 1;  // |01><01|
  CHECK((proj.matrix() - e01).norm() == doctest::Approx(0.0));

  CHECK_THROWS_AS(tensor(sx, LabeledOperator(Layout({A}), pauli_z())), std::invalid_argument);
}

TEST_CASE("partial_trace: choi marginal, product, entangled marginal") {
  SpaceLabel I("I", 2), O("O", 2);
  Prng rng(7);

  // Tr_O |U>><<U| = 1_I for Haar-like unitaries (here via QR of random).
  for (int rep = 0; rep < 5; ++rep) {
    MatrixXcd g = random_matrix(rng, 2);
    Eigen::HouseholderQR<MatrixXcd> qr(g);
    MatrixXcd u = qr.householderQ();
    auto choi = choi_ket_of(u, I, O);
    auto marg = partial_trace(choi, {"O"});
    CHECK((marg.matrix() - MatrixXcd::Identity(2, 2)).norm() < 1e-12);
  }

  // partial_trace(A (x) B, {B}) = Tr(B) A
  SpaceLabel A("A", 3), B("B", 2);
  auto a = random_labeled_hermitian(rng, Layout({A}));
  auto b = random_labeled_hermitian(rng, Layout({B}));
  auto red = partial_trace(tensor(a, b), {"B"});
  CHECK((red.matrix() - b.matrix().trace() * a.matrix()).norm() < 1e-12);

  // maximally entangled marginal
  auto phi = phi_plus(I, O);
  auto half = partial_trace(LabeledOperator(phi.layout(), phi.matrix() / 2.0), {"O"});
  CHECK((half.matrix() - MatrixXcd::Identity(2, 2) / 2.0).norm() < 1e-12);

  // trace preservation for arbitrary subsets
  SpaceLabel C("C", 2);
  auto op = random_labeled_hermitian(rng, Layout({A, B, C}));
  for (auto names : std::vector<std::vector<std::string>>{{"A"}, {"B", "C"}, {"A", "C"}}) {
    auto pt = partial_trace(op, names);
    CHECK(std::abs(pt.trace() - op.trace()) < 1e-10);
  }

  CHECK_THROWS_AS(partial_trace(op, {"nope"}), std::invalid_argument);
}

TEST_CASE("trace_and_replace: idempotent, choi value, empty set") {
  SpaceLabel I("I", 2), O("O", 2);
  Prng rng(11);

  MatrixXcd g = random_matrix(rng, 2);
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd u = qr.householderQ();
  auto choi = choi_ket_of(u, I, O);

  // _O |U>><<U| = 1_{IO} / d_O  (from Tr_O |U>><<U| = 1_I)
  auto r = trace_and_replace(choi, {"O"});
  CHECK((r.matrix() - MatrixXcd::Identity(4, 4) / 2.0).norm() < 1e-12);

  // idempotency on random operators, any subset
  SpaceLabel A("A", 3), B("B", 2), C("C", 2);
  auto op = random_labeled_hermitian(rng, Layout({A, B, C}));
  for (auto names : std::vector<std::vector<std::string>>{{"A"}, {"B"}, {"A", "C"}}) {
    auto once = trace_and_replace(op, names);
    auto twice = trace_and_replace(once, names);
    CHECK((once.matrix() - twice.matrix()).norm() < 1e-12);
  }

  // empty set is the identity map
  auto same = trace_and_replace(op, {});
  CHECK((same.matrix() - op.matrix()).norm() == doctest::Approx(0.0));

  // self-adjointness under Hilbert-Schmidt: <_X A, B> = <A, _X B>
  auto x = random_labeled_hermitian(rng, Layout({A, B, C}));
  auto y = random_labeled_hermitian(rng, Layout({A, B, C}));
  auto xa = trace_and_replace(x, {"B", "C"});
  auto yb = trace_and_replace(y, {"B", "C"});
  Complex lhs = (xa.matrix().adjoint() * y.matrix()).trace();
  Complex rhs = (x.matrix().adjoint() * yb.matrix()).trace();
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("partial_transpose: full transpose, involution, swap from phi+") {
  Prng rng(13);
  SpaceLabel A("A", 2), B("B", 2);
  auto op = random_labeled_hermitian(rng, Layout({A, B}));

  auto full = partial_transpose(op, {"A", "B"});
  CHECK((full.matrix() - op.matrix().transpose()).norm() < 1e-13);

  auto twice = partial_transpose(partial_transpose(op, {"B"}), {"B"});
  CHECK((twice.matrix() - op.matrix()).norm() < 1e-13);

  // phi+^{T_B} = SWAP
  auto phi = phi_plus(A, B);
  auto sw = partial_transpose(phi, {"B"});
  MatrixXcd swap_expect = MatrixXcd::Zero(4, 4);
  swap_expect(0, 0) = swap_expect(3, 3) = 1.0;
  swap_expect(1, 2) = swap_expect(2, 1) = 1.0;
  CHECK((sw.matrix() - swap_expect).norm() < 1e-13);
}

TEST_CASE("link_product: channel application, tensor fallback, unitary sandwich") {
  Prng rng(17);
  SpaceLabel I("I", 2), O("O", 3);

  // state * channel choi = channel output
  auto ks = random_kraus(rng, 2, 3, 2);
  auto choi = kraus_choi(ks, I, O);
  MatrixXcd rho = random_density(rng, 2);
  auto out = link_product(LabeledOperator(Layout({I}), rho), choi);
  CHECK((out.matrix() - apply_kraus(ks, rho)).norm() < 1e-11);
  CHECK(out.layout().size() == 1);
  CHECK(out.layout()[0].name == "O");

  // disjoint labels: link = tensor
  SpaceLabel A("A", 2), B("B", 2);
  auto x = random_labeled_hermitian(rng, Layout({A}));
  auto y = random_labeled_hermitian(rng, Layout({B}));
  CHECK(approx_equal(link_product(x, y), tensor(x, y), 1e-13));

  // rho^{I'I} * (|U>><<U|^T)^{IO} = (1 (x) U*) rho (1 (x) U^T) on [I',O]
  SpaceLabel Ip("I'", 2), I2("I", 2), O2("O", 2);
  auto rho2 = LabeledOperator(Layout({Ip, I2}), random_density(rng, 4));
  MatrixXcd g = random_matrix(rng, 2);
  Eigen::HouseholderQR<MatrixXcd> qr(g);
  MatrixXcd u = qr.householderQ();
  auto choiU = choi_ket_of(u, I2, O2);
  auto choiUT = LabeledOperator(choiU.layout(), choiU.matrix().transpose().eval());
  auto got = link_product(rho2, choiUT);
  MatrixXcd conj2 = MatrixXcd::Identity(2, 2);
  MatrixXcd lhsop(4, 4);
  {
    MatrixXcd iu = MatrixXcd::Zero(4, 4);
    for (long r = 0; r < 2; ++r)
      for (long c = 0; c < 2; ++c) iu.block(r * 2, c * 2, 2, 2) = conj2(r, c) * u.conjugate();
    lhsop = iu * rho2.matrix() * iu.adjoint();
  }
  auto expect = LabeledOperator(Layout({Ip, O2}), lhsop);
  CHECK(approx_equal(got, expect, 1e-11));

  // dim mismatch on shared label
  SpaceLabel I3("I", 3);
  CHECK_THROWS_AS(link_product(LabeledOperator::identity(Layout({I3})), choiU),
                  std::invalid_argument);
}

TEST_CASE("link_product: commutative and associative up to layout order") {
  Prng rng(19);
  SpaceLabel A("A", 2), B("B", 3), C("C", 2);
  for (int rep = 0; rep < 20; ++rep) {
    auto x = random_labeled_hermitian(rng, Layout({A, B}));
    auto y = random_labeled_hermitian(rng, Layout({B, C}));
    auto xy = link_product(x, y);
    auto yx = link_product(y, x);
    CHECK(approx_equal(xy, yx, 1e-12));
  }
  SpaceLabel D("D", 2);
  for (int rep = 0; rep < 10; ++rep) {
    auto x = random_labeled_hermitian(rng, Layout({A, B}));
    auto y = random_labeled_hermitian(rng, Layout({B, C}));
    auto z = random_labeled_hermitian(rng, Layout({C, D}));
    auto l = link_product(link_product(x, y), z);
    auto r = link_product(x, link_product(y, z));
    CHECK(approx_equal(l, r, 1e-11));
  }
}

TEST_CASE("link_product composition matches map composition on random states") {
  Prng rng(23);
  SpaceLabel I("I", 2), M("M", 3), O("O", 2);
  auto k1 = random_kraus(rng, 2, 3, 2);
  auto k2 = random_kraus(rng, 3, 2, 3);
  auto c1 = kraus_choi(k1, I, M);
  auto c2 = kraus_choi(k2, M, O);
  auto composed = link_product(c1, c2);
  for (int rep = 0; rep < 20; ++rep) {
    MatrixXcd rho = random_density(rng, 2);
    auto via_choi = link_product(LabeledOperator(Layout({I}), rho), composed);
    MatrixXcd direct = apply_kraus(k2, apply_kraus(k1, rho));
    CHECK((via_choi.matrix() - direct).norm() < 1e-10);
  }
}

TEST_CASE("permutation and layout normalization") {
  Prng rng(29);
  SpaceLabel A("A", 2), B("B", 3), C("C", 2);
  auto op = random_labeled_hermitian(rng, Layout({B, A, C}));
  auto p = op.permuted({"A", "B", "C"});
  auto back = p.permuted({"B", "A", "C"});
  CHECK((back.matrix() - op.matrix()).norm() == doctest::Approx(0.0));
  CHECK(approx_equal(op, p, 1e-15));

  // a concrete 2x3 permutation spot check
  auto ea = LabeledOperator(Layout({A}), pauli_z());
  MatrixXcd m3 = MatrixXcd::Zero(3, 3);
  m3(0, 1) = 1.0;
  auto eb = LabeledOperator(Layout({B}), m3);
  auto ab = tensor(ea, eb);
  auto ba = tensor(eb, ea);
  CHECK(approx_equal(ab, ba, 1e-15));
}

TEST_CASE("product basis: orthonormal, sector structure, transforms round trip") {
  ProductBasis basis({2, 3});
  CHECK(basis.space_dim() == 6);
  CHECK(basis.basis_size() == 36);

  // orthonormality of a sample of pairs
  for (long a = 0; a < 36; ++a)
    for (long b = a; b < 36; ++b) {
      Complex ip = (basis.element(a).adjoint() * basis.element(b)).trace();
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-12);
    }

  // identity element is flat index 0, sector 0
  CHECK(basis.sector_of(0) == 0);
  CHECK((basis.element(0) - MatrixXcd::Identity(6, 6) / std::sqrt(6.0)).norm() < 1e-14);

  Prng rng(31);
  MatrixXcd h = random_hermitian(rng, 6);
  VectorXd c = basis.coords_from_matrix(h);
  MatrixXcd h2 = basis.matrix_from_coords(c);
  CHECK((h - h2).norm() < 1e-12);

  // coords agree with naive projections
  for (long a : {0L, 5L, 17L, 35L}) {
    Complex ip = (basis.element(a) * h).trace();
    CHECK(std::abs(ip.imag()) < 1e-12);
    CHECK(std::abs(ip.real() - c[a]) < 1e-12);
  }
}

TEST_CASE("product basis: congruence transform equals Tr(B_r W B_s W)") {
  Prng rng(37);
  ProductBasis basis({2, 2});
  const long D2 = basis.basis_size();
  MatrixXcd w1 = random_psd(rng, 4), w2 = random_psd(rng, 4);

  MatrixXcd buf = MatrixXcd::Zero(D2, D2), scratch(D2, D2);
  basis.accumulate_pair_kron(w1, buf);
  basis.accumulate_pair_kron(w2, buf);
  basis.congruence_transform(buf, scratch);

  std::vector<long> rows;
  for (long r = 0; r < D2; ++r) rows.push_back(r);
  MatrixXd M = basis.gather_real(buf, rows);

  for (long r = 0; r < D2; ++r)
    for (long s = 0; s < D2; ++s) {
      const Complex direct = (basis.element(r) * w1 * basis.element(s) * w1).trace() +
                             (basis.element(r) * w2 * basis.element(s) * w2).trace();
      CHECK(std::abs(direct.imag()) < 1e-10);
      CHECK(M(r, s) == doctest::Approx(direct.real()).epsilon(1e-9));
    }
  CHECK((M - M.transpose()).norm() < 1e-9);
}

TEST_CASE("product basis: sectors kill exactly under trace_and_replace") {
  // _S B_a = B_a if sector(a) misses S, else 0.
  ProductBasis basis({2, 2});
  SpaceLabel A("A", 2), B("B", 2);
  Layout layout({A, B});
  for (long a = 0; a < basis.basis_size(); ++a) {
    LabeledOperator el(layout, basis.element(a));
    auto mask = basis.sector_of(a);
    auto ra = trace_and_replace(el, {"A"});
    double expect_a = (mask & 1u) ? 0.0 : 1.0;
    CHECK((ra.matrix() - expect_a * el.matrix()).norm() < 1e-13);
    auto rb = trace_and_replace(el, {"B"});
    double expect_b = (mask & 2u) ? 0.0 : 1.0;
    CHECK((rb.matrix() - expect_b * el.matrix()).norm() < 1e-13);
  }
}
