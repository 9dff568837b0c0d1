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

#include "chandisc/strategies.hpp"

namespace chandisc {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Par:
      return "par";
    case Strategy::Seq:
      return "seq";
    case Strategy::Gen:
      return "gen";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "par" || s == "PAR") return Strategy::Par;
  if (s == "seq" || s == "SEQ") return Strategy::Seq;
  if (s == "gen" || s == "GEN") return Strategy::Gen;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

LabeledOperator apply_condition(const LinearCondition& cond, const LabeledOperator& op) {
  LabeledOperator acc = LabeledOperator::zero(op.layout());
  for (const auto& term : cond.terms) {
    LabeledOperator t = trace_and_replace(op, term.labels);
    acc.matrix() += term.coeff * t.matrix();
  }
  return acc;
}

namespace {

std::vector<std::string> in_labels(int from, int to) {  // slots [from, to)
  std::vector<std::string> v;
  for (int j = from; j < to; ++j) v.push_back(input_label_name(j));
  return v;
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// I_{j+1} O_{j+1} ... I_k O_k
std::vector<std::string> suffix_labels(int j, int k) {
  std::vector<std::string> v;
  for (int s = j + 1; s < k; ++s) {
    v.push_back(input_label_name(s));
    v.push_back(output_label_name(s));
  }
  return v;
}

std::vector<std::string> all_outputs(int k) {
  std::vector<std::string> v;
  for (int j = 0; j < k; ++j) v.push_back(output_label_name(j));
  return v;
}

std::vector<std::string> all_labels(int k) {
  std::vector<std::string> v = in_labels(0, k);
  return cat(std::move(v), all_outputs(k));
}

void check_supported(Strategy s, int k) {
  if (k < 1) throw std::invalid_argument("build_constraints: k must be >= 1");
  if (s == Strategy::Gen && k > 3)
    throw std::invalid_argument(
        "general processes are characterized only for k in {1,2,3}; k=" + std::to_string(k) +
        " is unsupported");
  if (k > 8) throw std::invalid_argument("build_constraints: k too large");
}

}  // namespace

ConstraintSet build_constraints(Strategy s, int k, const std::vector<SlotDims>& dims) {
  check_supported(s, k);
  if (static_cast<int>(dims.size()) != k)
    throw std::invalid_argument("build_constraints: dims size != k");
  ConstraintSet cs;
  cs.slots = dims;
  cs.layout = canonical_process_layout(dims);
  double d_out = 1;
  for (const auto& sd : dims) d_out *= sd.out;
  cs.trace_value = d_out;

  auto in = [&](int j) { return input_label_name(j); };
  auto out = [&](int j) { return output_label_name(j); };

  if (s == Strategy::Par || k == 1) {
    // W = _O W  (sigma^I (x) 1^O)
    cs.conditions.push_back({"W = _O W", {{1.0, {}}, {-1.0, all_outputs(k)}}});
    return cs;
  }

  if (s == Strategy::Seq) {
    // W = _{O_k} W and the telescoping chain down to slot 1.
    cs.conditions.push_back({"W = _Ok W", {{1.0, {}}, {-1.0, {out(k - 1)}}}});
    for (int j = k - 2; j >= 0; --j) {
      auto sfx = suffix_labels(j, k);
      cs.conditions.push_back({"_{suffix " + std::to_string(j + 2) + "..k} W = _{O" +
                                   std::to_string(j + 1) + " suffix} W",
                               {{1.0, sfx}, {-1.0, cat({out(j)}, sfx)}}});
    }
    return cs;
  }

  // GEN, k = 2 or 3: the bipartite and tripartite process characterizations.
  if (k == 2) {
    cs.conditions.push_back(
        {"_{I1O1} W = _{I1O1O2} W",
         {{1.0, {in(0), out(0)}}, {-1.0, {in(0), out(0), out(1)}}}});
    cs.conditions.push_back(
        {"_{I2O2} W = _{O1I2O2} W",
         {{1.0, {in(1), out(1)}}, {-1.0, {out(0), in(1), out(1)}}}});
    cs.conditions.push_back({"W + _{O1O2} W = _{O1} W + _{O2} W",
                             {{1.0, {}},
                              {1.0, {out(0), out(1)}},
                              {-1.0, {out(0)}},
                              {-1.0, {out(1)}}}});
    return cs;
  }

  // k == 3
  cs.conditions.push_back({"_{I1O1I2O2} W = _{I1O1I2O2O3} W",
                           {{1.0, {in(0), out(0), in(1), out(1)}},
                            {-1.0, {in(0), out(0), in(1), out(1), out(2)}}}});
  cs.conditions.push_back({"_{I2O2I3O3} W = _{O1I2O2I3O3} W",
                           {{1.0, {in(1), out(1), in(2), out(2)}},
                            {-1.0, {out(0), in(1), out(1), in(2), out(2)}}}});
  cs.conditions.push_back({"_{I1O1I3O3} W = _{I1O1O2I3O3} W",
                           {{1.0, {in(0), out(0), in(2), out(2)}},
                            {-1.0, {in(0), out(0), out(1), in(2), out(2)}}}});
  cs.conditions.push_back({"_{I1O1} W + _{I1O1O2O3} W = _{I1O1O2} W + _{I1O1O3} W",
                           {{1.0, {in(0), out(0)}},
                            {1.0, {in(0), out(0), out(1), out(2)}},
                            {-1.0, {in(0), out(0), out(1)}},
                            {-1.0, {in(0), out(0), out(2)}}}});
  cs.conditions.push_back({"_{I2O2} W + _{O1I2O2O3} W = _{O1I2O2} W + _{I2O2O3} W",
                           {{1.0, {in(1), out(1)}},
                            {1.0, {out(0), in(1), out(1), out(2)}},
                            {-1.0, {out(0), in(1), out(1)}},
                            {-1.0, {in(1), out(1), out(2)}}}});
  cs.conditions.push_back({"_{I3O3} W + _{O1O2I3O3} W = _{O1I3O3} W + _{O2I3O3} W",
                           {{1.0, {in(2), out(2)}},
                            {1.0, {out(0), out(1), in(2), out(2)}},
                            {-1.0, {out(0), in(2), out(2)}},
                            {-1.0, {out(1), in(2), out(2)}}}});
  cs.conditions.push_back({"W + sum _{OiOj} W = sum _{Oi} W + _{O1O2O3} W",
                           {{1.0, {}},
                            {1.0, {out(0), out(1)}},
                            {1.0, {out(0), out(2)}},
                            {1.0, {out(1), out(2)}},
                            {-1.0, {out(0)}},
                            {-1.0, {out(1)}},
                            {-1.0, {out(2)}},
                            {-1.0, {out(0), out(1), out(2)}}}});
  return cs;
}

ConstraintSet dual_affine_constraints(Strategy s, int k, const std::vector<SlotDims>& dims) {
  check_supported(s, k);
  if (static_cast<int>(dims.size()) != k)
    throw std::invalid_argument("dual_affine_constraints: dims size != k");
  ConstraintSet cs;
  cs.slots = dims;
  cs.layout = canonical_process_layout(dims);
  double d_in = 1;
  for (const auto& sd : dims) d_in *= sd.in;
  cs.trace_value = d_in;

  auto in = [&](int j) { return input_label_name(j); };
  auto out = [&](int j) { return output_label_name(j); };

  // Channel condition Tr_O Wbar = 1_I, written as _O Wbar = _{IO} Wbar.
  LinearCondition channel{"_O Wbar = _{IO} Wbar",
                          {{1.0, all_outputs(k)}, {-1.0, all_labels(k)}}};

  if (s == Strategy::Par || k == 1) {
    cs.conditions.push_back(channel);
    return cs;
  }

  if (s == Strategy::Seq) {
    // Channel with memory, teeth interleaving the primal comb: tracing the
    // last output removes the dependence on the last input, recursively.
    for (int j = k - 1; j >= 0; --j) {
      auto sfx = suffix_labels(j, k);
      cs.conditions.push_back({"_{suffix O" + std::to_string(j + 1) + "} Wbar = _{suffix I" +
                                   std::to_string(j + 1) + "O" + std::to_string(j + 1) + "} Wbar",
                               {{1.0, cat({out(j)}, sfx)}, {-1.0, cat({in(j), out(j)}, sfx)}}});
    }
    cs.conditions.push_back(channel);
    return cs;
  }

  // GEN dual affine: non-signaling channel.
  for (int j = 0; j < k; ++j)
    cs.conditions.push_back({"_{O" + std::to_string(j + 1) + "} Wbar = _{I" +
                                 std::to_string(j + 1) + "O" + std::to_string(j + 1) + "} Wbar",
                             {{1.0, {out(j)}}, {-1.0, {in(j), out(j)}}}});
  cs.conditions.push_back(channel);
  return cs;
}

ConstraintSet build_constraints(Strategy s, int k, int d) {
  return build_constraints(s, k, uniform_slots(d, k));
}
ConstraintSet dual_affine_constraints(Strategy s, int k, int d) {
  return dual_affine_constraints(s, k, uniform_slots(d, k));
}

namespace {

// Scalar action of a condition on a sector: _S acts as 1 iff S misses the
// sector's traceless factors.
double condition_scalar(const LinearCondition& cond, std::uint32_t mask, const Layout& layout) {
  double s = 0;
  for (const auto& term : cond.terms) {
    bool hits = false;
    for (const auto& name : term.labels)
      if (mask & (1u << layout.index_of(name))) {
        hits = true;
        break;
      }
    if (!hits) s += term.coeff;
  }
  return s;
}

}  // namespace

std::vector<std::uint32_t> allowed_sectors(const ConstraintSet& cs) {
  const int L = static_cast<int>(cs.layout.size());
  std::vector<std::uint32_t> allowed;
  for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
    bool ok = true;
    for (const auto& cond : cs.conditions)
      if (std::abs(condition_scalar(cond, mask, cs.layout)) > 1e-9) {
        ok = false;
        break;
      }
    if (ok) allowed.push_back(mask);
  }
  return allowed;
}

LoweredConstraints lower_constraints(const ConstraintSet& cs, const ProductBasis& basis) {
  LoweredConstraints lc;
  lc.allowed_masks = allowed_sectors(cs);
  std::vector<bool> allowed(1u << cs.layout.size(), false);
  for (auto m : lc.allowed_masks) allowed[m] = true;

  std::vector<long> rows;
  rows.push_back(0);  // trace normalization row
  for (long f = 1; f < basis.basis_size(); ++f)
    if (!allowed[basis.sector_of(f)]) rows.push_back(f);
  lc.rows = std::move(rows);
  lc.rhs = VectorXd::Zero(static_cast<long>(lc.rows.size()));
  lc.rhs[0] = cs.trace_value / std::sqrt(static_cast<double>(basis.space_dim()));
  return lc;
}

LabeledOperator project_onto(const ConstraintSet& cs, const LabeledOperator& op) {
  std::vector<int> dims;
  for (const auto& l : cs.layout.labels()) dims.push_back(l.dim);
  ProductBasis basis(dims);
  LabeledOperator aligned = op;
  if (!(op.layout() == cs.layout)) {
    std::vector<std::string> order;
    for (const auto& l : cs.layout.labels()) order.push_back(l.name);
    aligned = op.permuted(order);
  }
  auto lc = lower_constraints(cs, basis);
  std::vector<bool> allowed(1u << cs.layout.size(), false);
  for (auto m : lc.allowed_masks) allowed[m] = true;

  VectorXd c = basis.coords_from_matrix(aligned.matrix());
  for (long f = 0; f < basis.basis_size(); ++f)
    if (!allowed[basis.sector_of(f)]) c[f] = 0;
  c[0] = cs.trace_value / std::sqrt(static_cast<double>(basis.space_dim()));
  return LabeledOperator(cs.layout, basis.matrix_from_coords(c));
}

double ValidationReport::worst_equality_residual() const {
  double w = trace_residual;
  for (const auto& c : condition_residuals) w = std::max(w, c.residual);
  return w;
}

double ValidationReport::worst_negative_eigenvalue() const {
  double w = 0;
  for (double e : min_eigenvalues) w = std::min(w, e);
  return w;
}

bool ValidationReport::passed() const {
  return worst_equality_residual() <= tolerance && worst_negative_eigenvalue() >= -tolerance;
}

ValidationReport validate(const std::vector<LabeledOperator>& blocks, const ConstraintSet& cs,
                          double tol) {
  if (blocks.empty()) throw std::invalid_argument("validate: no blocks");
  std::vector<std::string> order;
  for (const auto& l : cs.layout.labels()) order.push_back(l.name);

  ValidationReport rep;
  rep.tolerance = tol;
  LabeledOperator sum = LabeledOperator::zero(cs.layout);
  for (const auto& b : blocks) {
    LabeledOperator aligned = (b.layout() == cs.layout) ? b : b.permuted(order);
    if (!(aligned.layout() == cs.layout))
      throw std::invalid_argument("validate: block layout does not match constraint layout");
    sum.matrix() += aligned.matrix();
    rep.min_eigenvalues.push_back(aligned.min_eigenvalue());
  }
  for (const auto& cond : cs.conditions)
    rep.condition_residuals.push_back({cond.name, apply_condition(cond, sum).matrix().norm()});
  rep.trace_residual = std::abs(sum.trace() - cs.trace_value);
  return rep;
}

}  // namespace chandisc
