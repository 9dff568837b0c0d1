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

#include "chandisc/labeled_operator.hpp"

#include <set>

namespace chandisc {

namespace {

// Positions of `names` within `layout`, throwing on unknown names.
std::vector<int> positions_of(const Layout& layout, const std::vector<std::string>& names) {
  std::vector<int> pos;
  pos.reserve(names.size());
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) continue;  // ignore repeats
    pos.push_back(layout.index_of(n));
  }
  std::sort(pos.begin(), pos.end());
  return pos;
}

// Flat index -> digits under row-major strides.
inline void decompose(long flat, const std::vector<long>& strides,
                      const std::vector<int>& dims, std::vector<int>& digits) {
  for (std::size_t i = 0; i < strides.size(); ++i) {
    digits[i] = static_cast<int>(flat / strides[i]);
    flat %= strides[i];
    (void)dims;
  }
}

std::vector<int> dims_of(const Layout& layout) {
  std::vector<int> d;
  for (const auto& l : layout.labels()) d.push_back(l.dim);
  return d;
}

}  // namespace

LabeledOperator LabeledOperator::permuted(const std::vector<std::string>& order) const {
  if (order.size() != layout_.size())
    throw std::invalid_argument("permuted: order must mention every label exactly once");
  std::vector<int> src_pos(order.size());
  std::vector<SpaceLabel> new_labels(order.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!seen.insert(order[i]).second)
      throw std::invalid_argument("permuted: repeated label '" + order[i] + "'");
    src_pos[i] = layout_.index_of(order[i]);
    new_labels[i] = layout_[src_pos[i]];
  }
  Layout new_layout(new_labels);

  const auto src_strides = layout_.strides();
  const auto dst_strides = new_layout.strides();
  const auto dims = dims_of(layout_);
  const long d = dim();

  // old flat -> new flat index map
  std::vector<long> map(d);
  std::vector<int> digits(layout_.size());
  for (long f = 0; f < d; ++f) {
    decompose(f, src_strides, dims, digits);
    long nf = 0;
    for (std::size_t i = 0; i < order.size(); ++i) nf += digits[src_pos[i]] * dst_strides[i];
    map[f] = nf;
  }

  MatrixXcd out(d, d);
  for (long c = 0; c < d; ++c)
    for (long r = 0; r < d; ++r) out(map[r], map[c]) = mat_(r, c);
  return LabeledOperator(std::move(new_layout), std::move(out));
}

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b) {
  std::vector<SpaceLabel> labels = a.layout().labels();
  for (const auto& l : b.layout().labels()) {
    if (a.layout().contains(l.name))
      throw std::invalid_argument("tensor: duplicate label '" + l.name + "'");
    labels.push_back(l);
  }
  const long da = a.dim(), db = b.dim();
  MatrixXcd out(da * db, da * db);
  for (long ra = 0; ra < da; ++ra)
    for (long ca = 0; ca < da; ++ca)
      out.block(ra * db, ca * db, db, db) = a.matrix()(ra, ca) * b.matrix();
  return LabeledOperator(Layout(std::move(labels)), std::move(out));
}

LabeledOperator partial_trace(const LabeledOperator& op, const std::vector<std::string>& names) {
  if (names.empty()) return op;
  const auto pos = positions_of(op.layout(), names);

  // Bring traced labels to the back, then sum over the trailing diagonal block.
  std::vector<std::string> order;
  std::vector<std::string> traced;
  for (std::size_t i = 0; i < op.layout().size(); ++i) {
    const auto& n = op.layout()[i].name;
    if (std::find(pos.begin(), pos.end(), static_cast<int>(i)) == pos.end())
      order.push_back(n);
    else
      traced.push_back(n);
  }
  std::vector<std::string> full = order;
  full.insert(full.end(), traced.begin(), traced.end());
  LabeledOperator p = op.permuted(full);

  long ds = 1;
  for (const auto& n : traced) ds *= op.layout()[op.layout().index_of(n)].dim;
  const long dk = p.dim() / ds;

  MatrixXcd out = MatrixXcd::Zero(dk, dk);
  for (long r = 0; r < dk; ++r)
    for (long c = 0; c < dk; ++c) {
      Complex s = 0;
      for (long t = 0; t < ds; ++t) s += p.matrix()(r * ds + t, c * ds + t);
      out(r, c) = s;
    }
  return LabeledOperator(op.layout().without(traced), std::move(out));
}

LabeledOperator trace_and_replace(const LabeledOperator& op,
                                  const std::vector<std::string>& names) {
  if (names.empty()) return op;
  const auto pos = positions_of(op.layout(), names);
  LabeledOperator pt = partial_trace(op, names);

  long ds = 1;
  for (int p : pos) ds *= op.layout()[p].dim;

  // Expand back with 1/d_S on the replaced factors, at their original positions.
  const long d = op.dim();
  const auto strides = op.layout().strides();
  const auto dims = dims_of(op.layout());
  const auto kept_layout = pt.layout();
  const auto kept_strides = kept_layout.strides();

  std::vector<int> kept_positions;
  for (std::size_t i = 0; i < op.layout().size(); ++i)
    if (std::find(pos.begin(), pos.end(), static_cast<int>(i)) == pos.end())
      kept_positions.push_back(static_cast<int>(i));

  // flat -> (kept flat, replaced flat)
  std::vector<long> kept_of(d), repl_of(d);
  std::vector<int> digits(op.layout().size());
  for (long f = 0; f < d; ++f) {
    decompose(f, strides, dims, digits);
    long kf = 0;
    for (std::size_t i = 0; i < kept_positions.size(); ++i)
      kf += digits[kept_positions[i]] * kept_strides[i];
    long rf = 0;
    for (int p : pos) rf = rf * dims[p] + digits[p];
    kept_of[f] = kf;
    repl_of[f] = rf;
  }

  MatrixXcd out = MatrixXcd::Zero(d, d);
  const double inv = 1.0 / static_cast<double>(ds);
  for (long c = 0; c < d; ++c)
    for (long r = 0; r < d; ++r)
      if (repl_of[r] == repl_of[c]) out(r, c) = pt.matrix()(kept_of[r], kept_of[c]) * inv;
  return LabeledOperator(op.layout(), std::move(out));
}

LabeledOperator partial_transpose(const LabeledOperator& op,
                                  const std::vector<std::string>& names) {
  if (names.empty()) return op;
  const auto pos = positions_of(op.layout(), names);
  const long d = op.dim();
  const auto strides = op.layout().strides();
  const auto dims = dims_of(op.layout());

  // Split each flat index into (transposed part, kept part) contributions.
  std::vector<long> tpart(d), kpart(d);
  std::vector<int> digits(op.layout().size());
  for (long f = 0; f < d; ++f) {
    decompose(f, strides, dims, digits);
    long t = 0, k = 0;
    for (std::size_t i = 0; i < op.layout().size(); ++i) {
      if (std::find(pos.begin(), pos.end(), static_cast<int>(i)) != pos.end())
        t += digits[i] * strides[i];
      else
        k += digits[i] * strides[i];
    }
    tpart[f] = t;
    kpart[f] = k;
  }

  MatrixXcd out(d, d);
  for (long c = 0; c < d; ++c)
    for (long r = 0; r < d; ++r)
      out(kpart[r] + tpart[c], kpart[c] + tpart[r]) = op.matrix()(r, c);
  return LabeledOperator(op.layout(), std::move(out));
}

LabeledOperator link_product(const LabeledOperator& a, const LabeledOperator& b) {
  std::vector<std::string> shared, keep_a, keep_b;
  for (const auto& l : a.layout().labels()) {
    int j = b.layout().find(l.name);
    if (j >= 0) {
      if (b.layout()[j].dim != l.dim)
        throw std::invalid_argument("link_product: shared label '" + l.name +
                                    "' has mismatched dims");
      shared.push_back(l.name);
    } else {
      keep_a.push_back(l.name);
    }
  }
  for (const auto& l : b.layout().labels())
    if (!a.layout().contains(l.name)) keep_b.push_back(l.name);

  if (shared.empty()) return tensor(a, b);

  // Permute to [keep_a, shared] and [shared, keep_b].
  std::vector<std::string> oa = keep_a;
  oa.insert(oa.end(), shared.begin(), shared.end());
  std::vector<std::string> ob = shared;
  ob.insert(ob.end(), keep_b.begin(), keep_b.end());
  LabeledOperator pa = a.permuted(oa);
  LabeledOperator pb = b.permuted(ob);

  long ds = 1;
  for (const auto& n : shared) ds *= a.layout()[a.layout().index_of(n)].dim;
  const long dka = pa.dim() / ds;
  const long dkb = pb.dim() / ds;

  // (A*B)[(x,y),(x',y')] = sum_{u,v} A[(x,u),(x',v)] B[(u,y),(v,y')];
  // the partial transpose in the definition cancels against the trace pairing.
  MatrixXcd am(dka * dka, ds * ds);  // [(x,x'), (u,v)]
  for (long x = 0; x < dka; ++x)
    for (long xp = 0; xp < dka; ++xp)
      for (long s = 0; s < ds; ++s)
        for (long sp = 0; sp < ds; ++sp)
          am(x * dka + xp, s * ds + sp) = pa.matrix()(x * ds + s, xp * ds + sp);

  MatrixXcd bm(ds * ds, dkb * dkb);  // [(s,s'), (y,y')]
  for (long s = 0; s < ds; ++s)
    for (long sp = 0; sp < ds; ++sp)
      for (long y = 0; y < dkb; ++y)
        for (long yp = 0; yp < dkb; ++yp)
          bm(s * ds + sp, y * dkb + yp) = pb.matrix()(s * dkb + y, sp * dkb + yp);

  MatrixXcd prod = am * bm;  // [(x,x'), (y,y')]

  const long dk = dka * dkb;
  MatrixXcd out(dk, dk);
  for (long x = 0; x < dka; ++x)
    for (long xp = 0; xp < dka; ++xp)
      for (long y = 0; y < dkb; ++y)
        for (long yp = 0; yp < dkb; ++yp)
          out(x * dkb + y, xp * dkb + yp) = prod(x * dka + xp, y * dkb + yp);

  std::vector<SpaceLabel> labels;
  for (const auto& n : keep_a) labels.push_back(a.layout()[a.layout().index_of(n)]);
  for (const auto& n : keep_b) labels.push_back(b.layout()[b.layout().index_of(n)]);
  return LabeledOperator(Layout(std::move(labels)), std::move(out));
}

double distance(const LabeledOperator& a, const LabeledOperator& b) {
  LabeledOperator na = a.normalized();
  LabeledOperator nb = b.normalized();
  if (!(na.layout() == nb.layout()))
    throw std::invalid_argument("distance: incompatible layouts");
  return (na.matrix() - nb.matrix()).norm();
}

bool approx_equal(const LabeledOperator& a, const LabeledOperator& b, double tol) {
  const double scale = std::max(1.0, std::max(a.matrix().norm(), b.matrix().norm()));
  return distance(a, b) <= tol * scale;
}

}  // namespace chandisc
