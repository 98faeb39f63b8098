// Copyright 2026 The fermiq Authors
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
/**
 * @file
 * exp(-i theta c P) as basis changes around a CNOT parity ladder.
 *
 * For support s_0 < s_1 < ... < s_{w-1}:
 *
 *   H on X factors, RXF on Y factors
 *   CNOT s_{w-1} -> s_{w-2}, ..., CNOT s_1 -> s_0
 *   RZ on s_0
 *   the ladder and basis changes undone in reverse
 *
 * RXF^dagger Z RXF = -Y, so each Y factor flips the rotation sign.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "fermiq/circuit.hpp"
#include "fermiq/error.hpp"
#include "fermiq/pauli_string.hpp"

namespace fermiq {

inline Circuit exponentiate_term(const PauliString& p, double theta, std::size_t width) {
  detail::require(p.size() == width, "term width differs from circuit width");
  detail::require(std::isfinite(theta), "non-finite evolution time");
  if (std::abs(p.coefficient().imag()) > kDropTolerance)
    throw PreconditionError("cannot exponentiate a term with complex coefficient");
  const double c = p.coefficient().real();
  Circuit out(width);
  const std::vector<std::size_t> s = p.support();
  if (s.empty()) {
    out.push(GlobalPhase{-theta * c});
    return out;
  }

  double sign = 1.0;
  for (std::size_t q : s) {
    const char l = p.label(q);
    if (l == 'X') out.push(Hadamard{q});
    if (l == 'Y') out.push(RxBasis{q, true}), sign = -sign;
  }
  for (std::size_t k = s.size() - 1; k > 0; --k) out.push(Cnot{s[k], s[k - 1]});
  out.push(Rz{s[0], 2.0 * theta * c * sign});
  for (std::size_t k = 1; k < s.size(); ++k) out.push(Cnot{s[k], s[k - 1]});
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const char l = p.label(*it);
    if (l == 'X') out.push(Hadamard{*it});
    if (l == 'Y') out.push(RxBasis{*it, false});
  }
  return out;
}

/// Gate count of exponentiate_term without building it.
inline GateCount term_gate_count(const PauliString& p) {
  const std::size_t w = p.weight();
  if (w == 0) return {};
  std::size_t m = 0;
  for (std::size_t q : p.support())
    if (p.label(q) != 'Z') ++m;
  return {1 + 2 * m, 2 * (w - 1)};
}

}  // namespace fermiq
