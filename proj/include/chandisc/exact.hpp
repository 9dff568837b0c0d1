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

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <string>
#include <vector>

#include "chandisc/types.hpp"

namespace chandisc {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Gaussian rational a + b i.
struct GaussRat {
  Rational re = 0;
  Rational im = 0;

  GaussRat() = default;
  GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  GaussRat conj() const { return GaussRat(re, -im); }
  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  Complex to_complex() const {
    return Complex(static_cast<double>(re), static_cast<double>(im));
  }
};

/// Dense Gaussian-rational matrix (row-major); sized for certificate work.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(long n) {
    RatMatrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = GaussRat(1);
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  GaussRat& operator()(long r, long c) { return a_[r * cols_ + c]; }
  const GaussRat& operator()(long r, long c) const { return a_[r * cols_ + c]; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix scaled(const GaussRat& s) const;
  RatMatrix adjoint() const;
  GaussRat trace() const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;
  bool is_hermitian() const;

  MatrixXcd to_complex() const;
  static RatMatrix from_complex_rounded(const MatrixXcd& m, long long max_den);

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<GaussRat> a_;
};

RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Partial trace over the factor positions in `traced` (dims per factor).
RatMatrix rat_partial_trace(const RatMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& traced);

/// Exact trace-and-replace over factor positions; layout preserved.
RatMatrix rat_trace_and_replace(const RatMatrix& m, const std::vector<int>& dims,
                                const std::vector<int>& traced);

/// Outcome of the exact PSD test.
struct PsdCheck {
  bool psd = false;
  std::vector<Rational> pivots;   // nonnegative LDL^T pivots when psd
  std::string failure;            // human-readable witness when not psd
};

/// Rigorous PSD certification: the Hermitian matrix is realified to a 2n x 2n
/// symmetric rational matrix and eliminated fraction-free with diagonal
/// pivoting; PSD iff every pivot is >= 0 exactly (zero-diagonal blocks must
/// vanish identically). Throws if the input is not Hermitian.
PsdCheck rational_psd_check(const RatMatrix& hermitian);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, long long max_den);

}  // namespace chandisc
