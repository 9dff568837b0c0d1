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

#include "chandisc/exact.hpp"

#include <cmath>

namespace chandisc {

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: size mismatch");
  RatMatrix out(rows_, o.cols_);
  for (long r = 0; r < rows_; ++r)
    for (long k = 0; k < cols_; ++k) {
      const GaussRat& x = (*this)(r, k);
      if (x.is_zero()) continue;
      for (long c = 0; c < o.cols_; ++c) {
        const GaussRat& y = o(k, c);
        if (!y.is_zero()) out(r, c) = out(r, c) + x * y;
      }
    }
  return out;
}

RatMatrix RatMatrix::scaled(const GaussRat& s) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
  return out;
}

RatMatrix RatMatrix::adjoint() const {
  RatMatrix out(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

GaussRat RatMatrix::trace() const {
  GaussRat t;
  for (long i = 0; i < std::min(rows_, cols_); ++i) t = t + (*this)(i, i);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool RatMatrix::is_hermitian() const {
  if (rows_ != cols_) return false;
  for (long r = 0; r < rows_; ++r)
    for (long c = r; c < cols_; ++c)
      if (!((*this)(r, c) == (*this)(c, r).conj())) return false;
  return true;
}

MatrixXcd RatMatrix::to_complex() const {
  MatrixXcd m(rows_, cols_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).to_complex();
  return m;
}

RatMatrix RatMatrix::from_complex_rounded(const MatrixXcd& m, long long max_den) {
  RatMatrix out(m.rows(), m.cols());
  for (long r = 0; r < m.rows(); ++r)
    for (long c = 0; c < m.cols(); ++c)
      out(r, c) = GaussRat(rationalize(m(r, c).real(), max_den),
                           rationalize(m(r, c).imag(), max_den));
  return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long ra = 0; ra < a.rows(); ++ra)
    for (long ca = 0; ca < a.cols(); ++ca) {
      const GaussRat& x = a(ra, ca);
      if (x.is_zero()) continue;
      for (long rb = 0; rb < b.rows(); ++rb)
        for (long cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = x * b(rb, cb);
    }
  return out;
}

namespace {

std::vector<long> mixed_strides(const std::vector<int>& dims) {
  std::vector<long> s(dims.size(), 1);
  for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) s[i] = s[i + 1] * dims[i + 1];
  return s;
}

}  // namespace

RatMatrix rat_partial_trace(const RatMatrix& m, const std::vector<int>& dims,
                            const std::vector<int>& traced) {
  long total = 1;
  for (int d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("rat_partial_trace: dims do not match matrix");
  const auto str = mixed_strides(dims);

  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    if (std::find(traced.begin(), traced.end(), i) == traced.end()) kept.push_back(i);

  long dk = 1;
  for (int i : kept) dk *= dims[i];
  long dt = 1;
  for (int i : traced) dt *= dims[i];

  // enumerate kept and traced flat contributions
  std::vector<long> kept_offsets(dk), traced_offsets(dt);
  {
    std::vector<int> digit(kept.size(), 0);
    for (long f = 0; f < dk; ++f) {
      long off = 0, rem = f;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        long radix = 1;
        for (std::size_t j = i + 1; j < kept.size(); ++j) radix *= dims[kept[j]];
        off += (rem / radix) * str[kept[i]];
        rem %= radix;
      }
      kept_offsets[f] = off;
    }
    (void)digit;
  }
  {
    for (long f = 0; f < dt; ++f) {
      long off = 0, rem = f;
      for (std::size_t i = 0; i < traced.size(); ++i) {
        long radix = 1;
        for (std::size_t j = i + 1; j < traced.size(); ++j) radix *= dims[traced[j]];
        off += (rem / radix) * str[traced[i]];
        rem %= radix;
      }
      traced_offsets[f] = off;
    }
  }

  RatMatrix out(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      GaussRat s;
      for (long t = 0; t < dt; ++t)
        s = s + m(kept_offsets[r] + traced_offsets[t], kept_offsets[c] + traced_offsets[t]);
      out(r, c) = s;
    }
  return out;
}

RatMatrix rat_trace_and_replace(const RatMatrix& m, const std::vector<int>& dims,
                                const std::vector<int>& traced) {
  if (traced.empty()) return m;
  RatMatrix pt = rat_partial_trace(m, dims, traced);
  const auto str = mixed_strides(dims);
  long total = 1;
  for (int d : dims) total *= d;

  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(dims.size()); ++i)
    if (std::find(traced.begin(), traced.end(), i) == traced.end()) kept.push_back(i);

  long dt = 1;
  for (int i : traced) dt *= dims[i];

  // flat -> (kept flat, traced flat)
  std::vector<long> kept_of(total), tr_of(total);
  for (long f = 0; f < total; ++f) {
    long rem = f, kf = 0, tf = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const long digit = rem / str[i];
      rem %= str[i];
      if (std::find(traced.begin(), traced.end(), static_cast<int>(i)) != traced.end())
        tf = tf * dims[i] + digit;
      else
        kf = kf * dims[i] + digit;
    }
    kept_of[f] = kf;
    tr_of[f] = tf;
  }

  const GaussRat inv(Rational(1, dt));
  RatMatrix out(total, total);
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c)
      if (tr_of[r] == tr_of[c]) out(r, c) = pt(kept_of[r], kept_of[c]) * inv;
  return out;
}

PsdCheck rational_psd_check(const RatMatrix& h) {
  PsdCheck result;
  if (!h.is_hermitian()) throw std::invalid_argument("rational_psd_check: not Hermitian");
  const long n = h.rows();
  const long n2 = 2 * n;

  // Realify: H = A + iB -> [[A, -B], [B, A]], symmetric with doubled spectrum.
  // Clear denominators so the Bareiss elimination stays in integers.
  BigInt den = 1;
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(h(r, c).re));
      den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(h(r, c).im));
    }
  std::vector<BigInt> m(n2 * n2);
  auto at = [&](long r, long c) -> BigInt& { return m[r * n2 + c]; };
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      const BigInt a = boost::multiprecision::numerator(Rational(h(r, c).re * den));
      const BigInt b = boost::multiprecision::numerator(Rational(h(r, c).im * den));
      at(r, c) = a;
      at(r + n, c + n) = a;
      at(r, c + n) = -b;
      at(r + n, c) = b;
    }

  // Fraction-free symmetric elimination with diagonal pivoting. After step t
  // the true LDL^T pivot is diag/prev; all entries remain integers.
  BigInt prev = 1;
  for (long t = 0; t < n2; ++t) {
    // choose the largest nonnegative diagonal entry
    long piv = -1;
    for (long i = t; i < n2; ++i) {
      if (at(i, i) < 0) {
        result.failure = "negative pivot at elimination step " + std::to_string(t);
        return result;
      }
      if (at(i, i) > 0 && (piv < 0 || at(i, i) > at(piv, piv))) piv = i;
    }
    if (piv < 0) {
      // zero diagonal block: PSD iff the remaining block vanishes
      for (long r = t; r < n2; ++r)
        for (long c = t; c < n2; ++c)
          if (at(r, c) != 0) {
            result.failure = "zero diagonal with nonzero off-diagonal at (" + std::to_string(r) +
                             ", " + std::to_string(c) + ")";
            return result;
          }
      for (long i = t; i < n2; ++i) result.pivots.emplace_back(0);
      result.psd = true;
      return result;
    }
    if (piv != t) {
      for (long c = 0; c < n2; ++c) std::swap(at(t, c), at(piv, c));
      for (long r = 0; r < n2; ++r) std::swap(at(r, t), at(r, piv));
    }
    const BigInt p = at(t, t);
    result.pivots.emplace_back(Rational(p) / Rational(prev));
    for (long r = t + 1; r < n2; ++r)
      for (long c = t + 1; c <= r; ++c) {
        BigInt v = p * at(r, c) - at(r, t) * at(t, c);
        v /= prev;  // exact by Bareiss
        at(r, c) = v;
        at(c, r) = v;
      }
    prev = p;
  }
  result.psd = true;
  return result;
}

Rational rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  const bool neg = x < 0;
  double v = std::abs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(frac);
    if (fl > 9e17) break;
    const long long a = static_cast<long long>(fl);
    if (q1 * a + q0 > max_den || p1 > (long long)4e18 / std::max(1LL, a)) break;
    const long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rational(0);
  Rational r(p1, q1);
  return neg ? -r : r;
}

}  // namespace chandisc
