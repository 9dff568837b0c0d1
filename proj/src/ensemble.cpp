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

#include "chandisc/ensemble.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace chandisc {

using nlohmann::json;

Ensemble::Ensemble(std::vector<UnitaryGate> gates_, VectorXd probs_)
    : gates(std::move(gates_)), probs(std::move(probs_)) {
  if (gates.empty()) throw std::invalid_argument("Ensemble: empty gate list");
  if (probs.size() != static_cast<long>(gates.size()))
    throw std::invalid_argument("Ensemble: probs length mismatch");
  const int d = gates[0].dim();
  for (const auto& g : gates)
    if (g.dim() != d) throw std::invalid_argument("Ensemble: mixed gate dimensions");
  double sum = 0;
  for (long i = 0; i < probs.size(); ++i) {
    if (probs[i] < -1e-15) throw std::invalid_argument("Ensemble: negative probability");
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("Ensemble: probabilities sum to " + std::to_string(sum));
}

Ensemble Ensemble::uniform(std::vector<UnitaryGate> gates_) {
  const long n = static_cast<long>(gates_.size());
  return Ensemble(std::move(gates_), VectorXd::Constant(n, 1.0 / static_cast<double>(n)));
}

namespace {

bool is_rational_obj(const json& v) { return v.is_object() && v.contains("num") && v.contains("den"); }

Rational parse_rational(const json& v) {
  if (is_rational_obj(v)) {
    const long long den = v.at("den").get<long long>();
    if (den == 0) throw std::invalid_argument("ensemble json: zero denominator");
    return Rational(v.at("num").get<long long>(), den);
  }
  throw std::invalid_argument("ensemble json: expected {num, den}");
}

// Returns the float value and, when the entry was rational, its exact form.
std::pair<Complex, std::optional<GaussRat>> parse_entry(const json& v) {
  if (v.is_number()) return {Complex(v.get<double>(), 0.0), std::nullopt};
  if (is_rational_obj(v)) {
    GaussRat g(parse_rational(v));
    return {g.to_complex(), g};
  }
  if (v.is_array() && v.size() == 2) {
    if (v[0].is_number() && v[1].is_number())
      return {Complex(v[0].get<double>(), v[1].get<double>()), std::nullopt};
    if (is_rational_obj(v[0]) && is_rational_obj(v[1])) {
      GaussRat g(parse_rational(v[0]), parse_rational(v[1]));
      return {g.to_complex(), g};
    }
  }
  throw std::invalid_argument("ensemble json: malformed matrix entry");
}

json emit_rational(const Rational& r) {
  json o;
  o["num"] = static_cast<long long>(boost::multiprecision::numerator(r));
  o["den"] = static_cast<long long>(boost::multiprecision::denominator(r));
  return o;
}

json emit_entry(Complex v, const std::optional<GaussRat>& exact) {
  if (exact) {
    if (exact->im == 0) return emit_rational(exact->re);
    return json::array({emit_rational(exact->re), emit_rational(exact->im)});
  }
  return json::array({v.real(), v.imag()});
}

}  // namespace

Ensemble ensemble_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("ensemble json: object expected");
  const int dim = j.at("dim").get<int>();

  std::vector<double> probs;
  std::vector<Rational> exact_probs;
  bool probs_exact = true;
  for (const auto& p : j.at("probs")) {
    if (p.is_number()) {
      probs.push_back(p.get<double>());
      probs_exact = false;
    } else {
      Rational r = parse_rational(p);
      exact_probs.push_back(r);
      probs.push_back(static_cast<double>(r));
    }
  }

  Ensemble out;
  std::vector<UnitaryGate> gates;
  std::vector<std::optional<RatMatrix>> exact;
  if (j.contains("unitaries")) {
    for (const auto& m : j.at("unitaries")) {
      if (!m.is_array() || m.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("ensemble json: unitary row count mismatch");
      MatrixXcd u(dim, dim);
      RatMatrix ru(dim, dim);
      bool all_exact = true;
      for (int r = 0; r < dim; ++r) {
        const auto& row = m[r];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
          throw std::invalid_argument("ensemble json: unitary column count mismatch");
        for (int c = 0; c < dim; ++c) {
          auto [val, ex] = parse_entry(row[c]);
          u(r, c) = val;
          if (ex)
            ru(r, c) = *ex;
          else
            all_exact = false;
        }
      }
      gates.emplace_back(std::move(u));
      exact.push_back(all_exact ? std::optional<RatMatrix>(std::move(ru)) : std::nullopt);
    }
  } else if (j.contains("names")) {
    for (const auto& n : j.at("names")) {
      gates.push_back(named_gate(n.get<std::string>()));
      exact.push_back(std::nullopt);
    }
  } else {
    throw std::invalid_argument("ensemble json: need 'unitaries' or 'names'");
  }

  VectorXd pv(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) pv[static_cast<long>(i)] = probs[i];
  out = Ensemble(std::move(gates), std::move(pv));
  out.exact_gates = std::move(exact);
  if (probs_exact && !exact_probs.empty()) out.exact_probs = std::move(exact_probs);
  if (j.contains("names"))
    for (const auto& n : j.at("names")) out.names.push_back(n.get<std::string>());
  if (out.dim() != dim) throw std::invalid_argument("ensemble json: dim mismatch");
  return out;
}

json ensemble_to_json(const Ensemble& e) {
  json j;
  j["dim"] = e.dim();
  json probs = json::array();
  for (long i = 0; i < e.probs.size(); ++i) {
    if (e.exact_probs)
      probs.push_back(emit_rational((*e.exact_probs)[i]));
    else
      probs.push_back(e.probs[i]);
  }
  j["probs"] = probs;
  json us = json::array();
  for (std::size_t g = 0; g < e.gates.size(); ++g) {
    const auto& m = e.gates[g].matrix;
    json rows = json::array();
    for (long r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (long c = 0; c < m.cols(); ++c) {
        std::optional<GaussRat> ex;
        if (g < e.exact_gates.size() && e.exact_gates[g]) ex = (*e.exact_gates[g])(r, c);
        row.push_back(emit_entry(m(r, c), ex));
      }
      rows.push_back(row);
    }
    us.push_back(rows);
  }
  j["unitaries"] = us;
  if (!e.names.empty()) j["names"] = e.names;
  return j;
}

Ensemble load_ensemble(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open ensemble file: " + path);
  json j;
  in >> j;
  return ensemble_from_json(j);
}

void save_ensemble(const Ensemble& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write ensemble file: " + path);
  out << ensemble_to_json(e).dump(1) << "\n";
}

}  // namespace chandisc
