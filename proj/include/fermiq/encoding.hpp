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
 * Fermionic creation and annihilation operators as Pauli sums.
 *
 * All three encodings share one shape:
 *
 *   a_j^dagger = 1/2 (X_U X_j Z_P - i X_U Y_j Z_rho)
 *   a_j        = 1/2 (X_U X_j Z_P + i X_U Y_j Z_rho)
 *
 *  - Jordan-Wigner: U = {}, P = rho = {0..j-1}.
 *  - parity: U = {j+1..n-1}, P = {j-1}, rho = {}.
 *  - Bravyi-Kitaev: U(j), P(j), rho(j) from the set tables.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fermiq/bk_sets.hpp"
#include "fermiq/error.hpp"
#include "fermiq/index_set.hpp"
#include "fermiq/pauli_sum.hpp"

namespace fermiq {

enum class EncodingKind { jordan_wigner, parity, bravyi_kitaev };

inline std::string_view to_string(EncodingKind k) {
  switch (k) {
    case EncodingKind::jordan_wigner: return "jw";
    case EncodingKind::parity: return "parity";
    case EncodingKind::bravyi_kitaev: return "bk";
  }
  return "?";
}

inline std::optional<EncodingKind> parse_encoding(std::string_view s) {
  if (s == "jw" || s == "jordan-wigner") return EncodingKind::jordan_wigner;
  if (s == "parity") return EncodingKind::parity;
  if (s == "bk" || s == "bravyi-kitaev") return EncodingKind::bravyi_kitaev;
  return std::nullopt;
}

/// The three sets that place a mode operator on the register.
struct ModeSets {
  IndexSet update;
  IndexSet parity;
  IndexSet rho;
};

inline ModeSets mode_sets(EncodingKind kind, std::size_t j, std::size_t n) {
  detail::check_orbital_count(n);
  if (j >= n)
    throw PreconditionError("mode " + std::to_string(j) + " out of range for " +
                            std::to_string(n) + " orbitals");
  switch (kind) {
    case EncodingKind::jordan_wigner: {
      IndexSet below = IndexSet::range(0, j);
      return {{}, below, below};
    }
    case EncodingKind::parity:
      return {IndexSet::range(j + 1, n), j ? IndexSet{j - 1} : IndexSet{}, {}};
    case EncodingKind::bravyi_kitaev: {
      const SetTable& t = set_table(n);
      return {t.update(j), t.parity(j), t.rho(j)};
    }
  }
  return {};
}

/// a_j^dagger when `dagger` is set, a_j otherwise.
inline PauliSum mode_operator(EncodingKind kind, bool dagger, std::size_t j,
                              std::size_t n) {
  const ModeSets s = mode_sets(kind, j, n);
  PauliString real_part = PauliString::on(n, s.update, 'X', 0.5);
  PauliString imag_part = real_part;
  imag_part.set_coefficient({0.0, dagger ? -0.5 : 0.5});
  real_part.set(j, 'X');
  imag_part.set(j, 'Y');
  for (std::size_t q : s.parity) real_part.set(q, 'Z');
  for (std::size_t q : s.rho) imag_part.set(q, 'Z');
  PauliSum out(n);
  out.add(real_part);
  out.add(imag_part);
  return out;
}

inline PauliSum creation(EncodingKind kind, std::size_t j, std::size_t n) {
  return mode_operator(kind, true, j, n);
}
inline PauliSum annihilation(EncodingKind kind, std::size_t j, std::size_t n) {
  return mode_operator(kind, false, j, n);
}

/// Pi+ / Pi- on odd qubit j: 1/2 (X_j Z_F(j) -/+ i Y_j).
inline PauliSum bk_ladder_pi(Ladder kind, std::size_t j, std::size_t n) {
  const SetTable& t = set_table(n);
  if (j >= n) throw PreconditionError("index out of range");
  if (j % 2 == 0)
    throw PreconditionError("Pi operators are defined for odd indices only");
  PauliString xz = PauliString::on(n, t.flip(j), 'Z', 0.5);
  xz.set(j, 'X');
  PauliSum out(n);
  out.add(xz);
  out.add(PauliString::on(n, {j}, 'Y', {0.0, kind == Ladder::raise ? -0.5 : 0.5}));
  return out;
}

}  // namespace fermiq
