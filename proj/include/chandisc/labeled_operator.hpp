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

#include "chandisc/types.hpp"

namespace chandisc {

/// A square operator together with the ordered tensor factorization it lives on.
///
/// Entries are stored as a dense complex matrix whose row/column indices are
/// row-major multi-indices over the layout dims. Hermiticity and positivity
/// are queryable, never enforced.
class LabeledOperator {
 public:
  LabeledOperator() = default;
  LabeledOperator(Layout layout, MatrixXcd entries)
      : layout_(std::move(layout)), mat_(std::move(entries)) {
    const long d = layout_.total_dim();
    if (mat_.rows() != d || mat_.cols() != d)
      throw std::invalid_argument("LabeledOperator: matrix side does not match layout dims");
  }

  static LabeledOperator identity(const Layout& layout) {
    const long d = layout.total_dim();
    return LabeledOperator(layout, MatrixXcd::Identity(d, d));
  }
  static LabeledOperator zero(const Layout& layout) {
    const long d = layout.total_dim();
    return LabeledOperator(layout, MatrixXcd::Zero(d, d));
  }

  const Layout& layout() const { return layout_; }
  const MatrixXcd& matrix() const { return mat_; }
  MatrixXcd& matrix() { return mat_; }
  long dim() const { return mat_.rows(); }

  Complex trace() const { return mat_.trace(); }

  bool is_hermitian(double tol = 1e-12) const {
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff() <= tol * std::max(1.0, mat_.norm());
  }
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es((mat_ + mat_.adjoint()) / 2.0,
                                                Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }
  bool is_psd(double tol = 1e-10) const {
    return is_hermitian(std::sqrt(tol)) && min_eigenvalue() >= -tol;
  }

  LabeledOperator operator+(const LabeledOperator& o) const {
    require_same_layout(o);
    return LabeledOperator(layout_, mat_ + o.mat_);
  }
  LabeledOperator operator-(const LabeledOperator& o) const {
    require_same_layout(o);
    return LabeledOperator(layout_, mat_ - o.mat_);
  }
  LabeledOperator operator*(Complex s) const { return LabeledOperator(layout_, mat_ * s); }
  LabeledOperator adjoint() const { return LabeledOperator(layout_, mat_.adjoint()); }

  /// Copy with the labels rearranged into the given name order.
  LabeledOperator permuted(const std::vector<std::string>& order) const;

  /// Copy with labels sorted by name; canonical form for comparisons.
  LabeledOperator normalized() const {
    const Layout sorted = layout_.sorted();
    std::vector<std::string> names;
    for (const auto& l : sorted.labels()) names.push_back(l.name);
    return permuted(names);
  }

 private:
  void require_same_layout(const LabeledOperator& o) const {
    if (!(layout_ == o.layout_))
      throw std::invalid_argument("LabeledOperator: layout mismatch in arithmetic");
  }

  Layout layout_;
  MatrixXcd mat_;
};

/// Kronecker product in layout order; label sets must be disjoint.
LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b);

/// Trace out the named labels; they are removed from the layout.
LabeledOperator partial_trace(const LabeledOperator& op, const std::vector<std::string>& names);

/// _X(op) = Tr_X(op) (x) 1_X / d_X with the identity reinserted at the original
/// positions, so the layout is unchanged. Idempotent and self-adjoint.
LabeledOperator trace_and_replace(const LabeledOperator& op,
                                  const std::vector<std::string>& names);

/// Transpose restricted to the named labels; involutive.
LabeledOperator partial_transpose(const LabeledOperator& op,
                                  const std::vector<std::string>& names);

/// Link product A * B: contraction over the shared labels,
///   A * B = Tr_sh[(A^{T_sh} (x) 1)(1 (x) B)].
/// Disjoint label sets degenerate to the tensor product. Commutative and
/// associative up to layout reordering.
LabeledOperator link_product(const LabeledOperator& a, const LabeledOperator& b);

/// Frobenius distance after normalizing both layouts (name-sorted order).
double distance(const LabeledOperator& a, const LabeledOperator& b);

/// True when the normalized forms agree within `tol` relative Frobenius norm.
bool approx_equal(const LabeledOperator& a, const LabeledOperator& b, double tol = 1e-12);

}  // namespace chandisc
