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

#include "chandisc/product_basis.hpp"

namespace chandisc {

namespace {

// Orthonormal Hermitian basis of L(C^d): identity first, then traceless
// elements. For d=2 this is {1,sx,sy,sz}/sqrt(2).
std::vector<MatrixXcd> factor_basis(int d) {
  std::vector<MatrixXcd> g;
  g.push_back(MatrixXcd::Identity(d, d) / std::sqrt(static_cast<double>(d)));
  const double r2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      MatrixXcd s = MatrixXcd::Zero(d, d);
      s(i, j) = r2;
      s(j, i) = r2;
      g.push_back(s);
      MatrixXcd a = MatrixXcd::Zero(d, d);
      a(i, j) = Complex(0, -r2);
      a(j, i) = Complex(0, r2);
      g.push_back(a);
    }
  for (int l = 1; l < d; ++l) {
    MatrixXcd h = MatrixXcd::Zero(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int m = 0; m < l; ++m) h(m, m) = norm;
    h(l, l) = -static_cast<double>(l) * norm;
    g.push_back(h);
  }
  return g;
}

// Right-multiply every contiguous (B x m) group of `data` (column-major
// within the group) by J, in place. `total` must be a multiple of B*m.
void right_mul_groups(Complex* data, long total, long B, int m, const MatrixXcd& J,
                      std::vector<Complex>& tmp) {
  const long gsize = B * m;
  tmp.resize(static_cast<std::size_t>(gsize));
  for (long base = 0; base < total; base += gsize) {
    Complex* g = data + base;
    std::copy(g, g + gsize, tmp.data());
    for (int sp = 0; sp < m; ++sp) {
      Complex* out = g + static_cast<long>(sp) * B;
      bool first = true;
      for (int s = 0; s < m; ++s) {
        const Complex js = J(s, sp);
        if (js == Complex(0, 0)) continue;
        const Complex* in = tmp.data() + static_cast<long>(s) * B;
        if (first) {
          for (long b = 0; b < B; ++b) out[b] = in[b] * js;
          first = false;
        } else {
          for (long b = 0; b < B; ++b) out[b] += in[b] * js;
        }
      }
      if (first)
        for (long b = 0; b < B; ++b) out[b] = Complex(0, 0);
    }
  }
}

}  // namespace

ProductBasis::ProductBasis(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("ProductBasis: no factors");
  for (int d : dims_) {
    if (d < 1) throw std::invalid_argument("ProductBasis: bad dim");
    D_ *= d;
    D2_ *= static_cast<long>(d) * d;
  }
  pair_strides_.assign(dims_.size(), 1);
  for (int l = static_cast<int>(dims_.size()) - 2; l >= 0; --l)
    pair_strides_[l] = pair_strides_[l + 1] * dims_[l + 1] * dims_[l + 1];

  for (int d : dims_) {
    factors_.push_back(factor_basis(d));
    const int m = d * d;
    MatrixXcd p(m, m);
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p(i * d + j, a) = factors_.back()[a](i, j);
    pmats_.push_back(std::move(p));
  }

  // alpha(i,j) and its inverse
  row_of_pair_.assign(static_cast<std::size_t>(D_) * D_, 0);
  inv_i_.assign(static_cast<std::size_t>(D2_), 0);
  inv_j_.assign(static_cast<std::size_t>(D2_), 0);
  const int L = num_factors();
  std::vector<long> dstr(L, 1);  // strides of the d-radix matrix index
  for (int l = L - 2; l >= 0; --l) dstr[l] = dstr[l + 1] * dims_[l + 1];
  for (long i = 0; i < D_; ++i)
    for (long j = 0; j < D_; ++j) {
      long alpha = 0, ii = i, jj = j;
      for (int l = 0; l < L; ++l) {
        const long di = ii / dstr[l], dj = jj / dstr[l];
        ii %= dstr[l];
        jj %= dstr[l];
        alpha += (di * dims_[l] + dj) * pair_strides_[l];
      }
      row_of_pair_[i * D_ + j] = alpha;
      inv_i_[alpha] = static_cast<int>(i);
      inv_j_[alpha] = static_cast<int>(j);
    }
}

MatrixXcd ProductBasis::element(long flat) const {
  MatrixXcd out = MatrixXcd::Ones(1, 1);
  for (int l = 0; l < num_factors(); ++l) {
    const long m = static_cast<long>(dims_[l]) * dims_[l];
    const int a = static_cast<int>((flat / pair_strides_[l]) % m);
    const MatrixXcd& g = factors_[l][a];
    MatrixXcd next(out.rows() * g.rows(), out.cols() * g.cols());
    for (long r = 0; r < out.rows(); ++r)
      for (long c = 0; c < out.cols(); ++c)
        next.block(r * g.rows(), c * g.cols(), g.rows(), g.cols()) = out(r, c) * g;
    out = std::move(next);
  }
  return out;
}

std::uint32_t ProductBasis::sector_of(long flat) const {
  std::uint32_t mask = 0;
  for (int l = 0; l < num_factors(); ++l) {
    const long m = static_cast<long>(dims_[l]) * dims_[l];
    if ((flat / pair_strides_[l]) % m != 0) mask |= (1u << l);
  }
  return mask;
}

std::vector<long> ProductBasis::indices_with_sectors(
    const std::vector<std::uint32_t>& masks) const {
  std::vector<std::uint32_t> sorted = masks;
  std::sort(sorted.begin(), sorted.end());
  std::vector<long> out;
  for (long f = 0; f < D2_; ++f)
    if (std::binary_search(sorted.begin(), sorted.end(), sector_of(f))) out.push_back(f);
  return out;
}

VectorXd ProductBasis::coords_from_matrix(const MatrixXcd& M) const {
  std::vector<Complex> q(static_cast<std::size_t>(D2_));
  for (long a = 0; a < D2_; ++a) q[a] = M(inv_i_[a], inv_j_[a]);
  std::vector<Complex> tmp;
  for (int l = 0; l < num_factors(); ++l) {
    const int m = dims_[l] * dims_[l];
    right_mul_groups(q.data(), D2_, pair_strides_[l], m, pmats_[l].conjugate(), tmp);
  }
  VectorXd c(D2_);
  for (long a = 0; a < D2_; ++a) c[a] = q[a].real();
  return c;
}

MatrixXcd ProductBasis::matrix_from_coords(const VectorXd& c) const {
  std::vector<Complex> q(static_cast<std::size_t>(D2_));
  for (long a = 0; a < D2_; ++a) q[a] = c[a];
  std::vector<Complex> tmp;
  for (int l = 0; l < num_factors(); ++l) {
    const int m = dims_[l] * dims_[l];
    right_mul_groups(q.data(), D2_, pair_strides_[l], m, pmats_[l].transpose(), tmp);
  }
  MatrixXcd M(D_, D_);
  for (long a = 0; a < D2_; ++a) M(inv_i_[a], inv_j_[a]) = q[a];
  return M;
}

void ProductBasis::accumulate_pair_kron(const MatrixXcd& W, MatrixXcd& buf) const {
  if (buf.rows() != D2_ || buf.cols() != D2_)
    throw std::invalid_argument("accumulate_pair_kron: bad buffer size");
  std::vector<Complex> wrow(static_cast<std::size_t>(D_));
  for (long beta = 0; beta < D2_; ++beta) {
    const int ib = inv_i_[beta], jb = inv_j_[beta];
    for (long j = 0; j < D_; ++j) wrow[j] = W(jb, j);
    const Complex* wcol = W.data() + static_cast<long>(ib) * D_;
    Complex* col = buf.data() + beta * D2_;
    for (long alpha = 0; alpha < D2_; ++alpha)
      col[alpha] += wcol[inv_i_[alpha]] * wrow[inv_j_[alpha]];
  }
}

void ProductBasis::apply_modes_adjoint_rows(MatrixXcd& buf, MatrixXcd&) const {
  std::vector<Complex> tmp;
  for (int l = 0; l < num_factors(); ++l) {
    const int m = dims_[l] * dims_[l];
    right_mul_groups(buf.data(), D2_ * D2_, pair_strides_[l], m, pmats_[l].conjugate(), tmp);
  }
}

void ProductBasis::congruence_transform(MatrixXcd& buf, MatrixXcd& scratch) const {
  apply_modes_adjoint_rows(buf, scratch);
  scratch.noalias() = buf.adjoint();
  apply_modes_adjoint_rows(scratch, buf);
  buf.swap(scratch);
  // buf now holds Z3 = P^H Z0^H P whose conjugate transpose is the congruence.
}

MatrixXd ProductBasis::gather_real(const MatrixXcd& buf, const std::vector<long>& rows) const {
  const long m = static_cast<long>(rows.size());
  MatrixXd M(m, m);
  for (long s = 0; s < m; ++s)
    for (long r = 0; r < m; ++r) M(r, s) = buf(rows[s], rows[r]).real();
  return M;
}

}  // namespace chandisc
