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

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "chandisc/exact.hpp"
#include "chandisc/gates.hpp"

namespace chandisc {

/// {p_i, U_i}: unitary gates of equal dimension with a probability vector.
/// Gates loaded from rational-valued JSON keep their exact entries alongside
/// the floating-point matrices so files round-trip bit-exactly.
struct Ensemble {
  std::vector<UnitaryGate> gates;
  VectorXd probs;
  std::vector<std::optional<RatMatrix>> exact_gates;  // empty or aligned with gates
  std::optional<std::vector<Rational>> exact_probs;
  std::vector<std::string> names;  // empty or aligned with gates

  Ensemble() = default;
  Ensemble(std::vector<UnitaryGate> gates_, VectorXd probs_);

  int size() const { return static_cast<int>(gates.size()); }
  int dim() const { return gates.empty() ? 0 : gates[0].dim(); }

  static Ensemble uniform(std::vector<UnitaryGate> gates_);
};

/// JSON schema: {"dim": int, "probs": [...], "unitaries": [[entry,...],...]}
/// plus optional "names" resolved via named_gate when "unitaries" is absent.
/// An entry is [re, im], a number, {"num","den"}, or a pair of the latter.
Ensemble ensemble_from_json(const nlohmann::json& j);
nlohmann::json ensemble_to_json(const Ensemble& e);

Ensemble load_ensemble(const std::string& path);
void save_ensemble(const Ensemble& e, const std::string& path);

}  // namespace chandisc
