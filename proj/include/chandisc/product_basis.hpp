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

#include <cstdint>

#include "chandisc/types.hpp"

namespace chandisc {

/// Orthonormal Hermitian basis of L(H_1 (x) ... (x) H_L) built as tensor
/// products of per-factor bases. Factor index 0 is always 1/sqrt(d); the
/// remaining d^2-1 elements are traceless (Pauli / Gell-Mann style), so
/// Tr(B_a B_b) = delta_ab and every trace-and-replace map is diagonal in
/// this basis ("sectors": which factors carry a traceless element).
///
/// Flat basis indices are row-major over the factors with radix d_l^2.
class ProductBasis {
 public:
  explicit ProductBasis(std::vector<int> dims);

  int num_factors() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  long space_dim() const { return D_; }        // matrix side
  long basis_size() const { return D2_; }      // = D^2

  /// Single-factor basis element a of factor l (d_l x d_l matrix).
  const MatrixXcd& factor_element(int l, int a) const { return factors_[l][a]; }

  /// Full basis element for a flat index (built on demand; small-use only).
  MatrixXcd element(long flat) const;

  /// Bitmask of factors on which `flat` carries a traceless element.
  std::uint32_t sector_of(long flat) const;

  /// Flat indices whose sector mask lies in `masks` (sorted ascending).
  std::vector<long> indices_with_sectors(const std::vector<std::uint32_t>& masks) const;

  /// c_a = Tr(B_a M); real for Hermitian M (imaginary parts dropped).
  VectorXd coords_from_matrix(const MatrixXcd& M) const;

  /// M = sum_a c_a B_a.
  MatrixXcd matrix_from_coords(const VectorXd& c) const;

  /// In place: Z <- adjoint(P) Z P followed by a final conjugate-transpose
  /// bookkeeping such that on return buf(r,s) = sum over the congruence,
  /// i.e. buf holds G with G(s,r) = conj(sum_{uv} P(u,r)* Z(u,v) P(v,s)).
  /// For Z = sum_b conj/kron of Hermitian scalings the gathered real parts
  /// give M(r,s) = Tr(B_r W B_s W); use gather_real() to read them.
  void congruence_transform(MatrixXcd& buf, MatrixXcd& scratch) const;

  /// Accumulate buf += kron-pair of W: buf(alpha(i,j), alpha(i',j')) +=
  /// W(i,i') * W(j',j), the matrix of X -> W X W in paired-index layout.
  void accumulate_pair_kron(const MatrixXcd& W, MatrixXcd& buf) const;

  /// After congruence_transform, extract M(r,s) (real symmetric) for the
  /// given row subset. buf holds the transform output (transposed form).
  MatrixXd gather_real(const MatrixXcd& buf, const std::vector<long>& rows) const;

 private:
  void apply_modes_adjoint_rows(MatrixXcd& buf, MatrixXcd& scratch) const;

  std::vector<int> dims_;
  long D_ = 1;
  long D2_ = 1;
  std::vector<long> pair_strides_;                  // radix d_l^2 strides
  std::vector<std::vector<MatrixXcd>> factors_;     // per-factor elements
  std::vector<MatrixXcd> pmats_;                    // p_l[(i*d+j), a] = g_a(i,j)
  std::vector<long> row_of_pair_;                   // alpha(i,j) <- i*D+j
  std::vector<int> inv_i_, inv_j_;                  // alpha -> (i,j)
};

}  // namespace chandisc
