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
#include "chandisc/process_space.hpp"
#include "chandisc/product_basis.hpp"

namespace chandisc {

enum class Strategy { Par, Seq, Gen };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

/// One trace-and-replace term: coeff * _labels(W).
struct TraceReplaceTerm {
  double coeff = 0;
  std::vector<std::string> labels;  // empty set means the identity map
};

/// A linear constraint sum_t coeff_t * _{S_t}(W) = 0. Every map here is a
/// real combination of commuting self-adjoint projectors.
struct LinearCondition {
  std::string name;
  std::vector<TraceReplaceTerm> terms;
};

/// Affine description of a process/tester class (or of its dual affine set):
/// homogeneous trace-and-replace conditions plus a trace normalization.
struct ConstraintSet {
  Layout layout;  // canonical [I1..Ik, O1..Ok]
  std::vector<SlotDims> slots;
  std::vector<LinearCondition> conditions;
  double trace_value = 0;

  int copies() const { return static_cast<int>(slots.size()); }
};

/// Evaluate a condition on an operator (must live on cs.layout's labels).
LabeledOperator apply_condition(const LinearCondition& cond, const LabeledOperator& op);

/// Primal process classes (Eq. of Sec. III A-C and the k=2/k=3 linear
/// characterization of general processes).
ConstraintSet build_constraints(Strategy s, int k, const std::vector<SlotDims>& dims);

/// Dual affine sets: channels (PAR), channels with memory (SEQ), and
/// non-signaling channels (GEN), normalized to trace d_I.
ConstraintSet dual_affine_constraints(Strategy s, int k, const std::vector<SlotDims>& dims);

ConstraintSet build_constraints(Strategy s, int k, int d);
ConstraintSet dual_affine_constraints(Strategy s, int k, int d);

/// Coefficient form of a ConstraintSet: every condition acts as a scalar on
/// each sector of the product Hermitian basis, so the affine set is exactly
/// "coefficients vanish outside `allowed_masks`, trace fixed". `rows` lists
/// the flat basis indices pinned by equality rows (index 0 carries the trace
/// normalization, rhs trace_value / sqrt(D); forbidden indices have rhs 0).
struct LoweredConstraints {
  std::vector<std::uint32_t> allowed_masks;
  std::vector<long> rows;
  VectorXd rhs;
};

LoweredConstraints lower_constraints(const ConstraintSet& cs, const ProductBasis& basis);

/// Sector masks allowed by the conditions (no trace normalization applied).
std::vector<std::uint32_t> allowed_sectors(const ConstraintSet& cs);

/// Orthogonal projection of op onto the affine set described by cs
/// (kill forbidden sectors, then fix the trace).
LabeledOperator project_onto(const ConstraintSet& cs, const LabeledOperator& op);

/// Per-constraint residuals and per-block spectra for a candidate tester.
struct ConditionResidual {
  std::string name;
  double residual = 0;
};

struct ValidationReport {
  std::vector<ConditionResidual> condition_residuals;
  double trace_residual = 0;
  std::vector<double> min_eigenvalues;
  double tolerance = 0;

  double worst_equality_residual() const;
  double worst_negative_eigenvalue() const;
  bool passed() const;
};

/// Validate tester blocks against a ConstraintSet: the linear conditions and
/// trace act on the block sum; PSD is checked per block.
ValidationReport validate(const std::vector<LabeledOperator>& blocks, const ConstraintSet& cs,
                          double tol);

}  // namespace chandisc
