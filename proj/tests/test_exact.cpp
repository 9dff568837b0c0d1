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

#include "chandisc/exact.hpp"
#include "test_util.hpp"

using namespace chandisc;

TEST_CASE("rationalize: exact dyadics and bounded approximations") {
  CHECK(rationalize(0.5, 1000) == Rational(1, 2));
  CHECK(rationalize(-0.75, 1000) == Rational(-3, 4));
  CHECK(rationalize(0.0, 1000) == Rational(0));
  Rational pi = rationalize(M_PI, 1000000);
  CHECK(std::abs(static_cast<double>(pi) - M_PI) < 1e-11);
  CHECK(boost::multiprecision::denominator(pi) <= 1000000);
}

TEST_CASE("rat matrix arithmetic and kron") {
  RatMatrix x(2, 2);
  x(0, 1) = GaussRat(1);
  x(1, 0) = GaussRat(1);
  RatMatrix y(2, 2);
  y(0, 1) = GaussRat(Rational(0), Rational(-1));
  y(1, 0) = GaussRat(Rational(0), Rational(1));
  // X * Y = i Z
  RatMatrix xy = x * y;
  CHECK(xy(0, 0) == GaussRat(Rational(0), Rational(1)));
  CHECK(xy(1, 1) == GaussRat(Rational(0), Rational(-1)));
  CHECK(xy(0, 1).is_zero());

  CHECK(x.is_hermitian());
  CHECK(y.is_hermitian());
  CHECK_FALSE(xy.is_hermitian());

  RatMatrix k = kron(x, y);
  CHECK(k.rows() == 4);
  CHECK(k(0, 3) == GaussRat(Rational(0), Rational(-1)));

  // partial trace over factor 0 of X (x) Y is Tr(X) * Y = 0
  auto pt = rat_partial_trace(k, {2, 2}, {0});
  CHECK(pt.is_zero());
  // over factor 1: Tr(Y) X = 0
  auto pt1 = rat_partial_trace(k, {2, 2}, {1});
  CHECK(pt1.is_zero());

  // trace-and-replace of the identity is itself
  auto id4 = RatMatrix::identity(4);
  auto tr = rat_trace_and_replace(id4, {2, 2}, {1});
  CHECK(tr == id4);

  // _0 (X (x) I) = 0, _1 (X (x) I) = X (x) I
  RatMatrix xi = kron(x, RatMatrix::identity(2));
  CHECK(rat_trace_and_replace(xi, {2, 2}, {0}).is_zero());
  CHECK(rat_trace_and_replace(xi, {2, 2}, {1}) == xi);
}

TEST_CASE("rational psd certification") {
  // PSD: [[2,1],[1,2]]
  RatMatrix a(2, 2);
  a(0, 0) = GaussRat(2);
  a(0, 1) = GaussRat(1);
  a(1, 0) = GaussRat(1);
  a(1, 1) = GaussRat(2);
  auto ra = rational_psd_check(a);
  CHECK(ra.psd);
  for (const auto& p : ra.pivots) CHECK(p >= 0);

  // not PSD: [[1,2],[2,1]]
  RatMatrix b = a;
  b(0, 0) = GaussRat(1);
  b(1, 1) = GaussRat(1);
  b(0, 1) = GaussRat(2);
  b(1, 0) = GaussRat(2);
  auto rb = rational_psd_check(b);
  CHECK_FALSE(rb.psd);
  CHECK(!rb.failure.empty());

  // complex PSD with rank deficiency: [[1, -i],[i, 1]] has eigenvalues {0, 2}
  RatMatrix c(2, 2);
  c(0, 0) = GaussRat(1);
  c(1, 1) = GaussRat(1);
  c(0, 1) = GaussRat(Rational(0), Rational(-1));
  c(1, 0) = GaussRat(Rational(0), Rational(1));
  auto rc = rational_psd_check(c);
  CHECK(rc.psd);

  // zero matrix is PSD via the zero-block path
  RatMatrix z(3, 3);
  CHECK(rational_psd_check(z).psd);

  // slightly negative definite direction must be caught exactly
  RatMatrix d = c;
  d(0, 0) = GaussRat(Rational(999999, 1000000));
  CHECK_FALSE(rational_psd_check(d).psd);

  // non-Hermitian input is rejected
  RatMatrix nh(2, 2);
  nh(0, 1) = GaussRat(1);
  CHECK_THROWS_AS(rational_psd_check(nh), std::invalid_argument);

  // agreement with floating point on random PSD and indefinite matrices
  Prng rng(3);
  for (int rep = 0; rep < 5; ++rep) {
    MatrixXcd g = testutil::random_psd(rng, 5);
    RatMatrix rg = RatMatrix::from_complex_rounded(g, 1 << 20);
    // rounding a strictly PD matrix stays PD
    CHECK(rational_psd_check(rg).psd);
    MatrixXcd h = testutil::random_hermitian(rng, 5);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    if (es.eigenvalues().minCoeff() < -1e-3)
      CHECK_FALSE(rational_psd_check(RatMatrix::from_complex_rounded(h, 1 << 20)).psd);
  }
}
