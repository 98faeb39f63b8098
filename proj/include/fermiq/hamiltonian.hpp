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
 * Electronic Hamiltonian assembly.
 *
 *   H = sum_ij h_ij a_i^+ a_j + 1/2 sum_ijkl h_ijkl a_i^+ a_j^+ a_k a_l
 *
 * Every integral is normal-ordered into one of five operator classes before
 * encoding:
 *
 *  - number:            a_i^+ a_i
 *  - excitation:        a_i^+ a_j + h.c.
 *  - Coulomb/exchange:  a_p^+ a_q^+ a_q a_p = n_p n_q
 *  - number-excitation: a_i^+ a_m^+ a_m a_k + h.c.
 *  - double excitation: a_p^+ a_q^+ a_r a_s + h.c., all indices distinct
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fermiq/composite.hpp"
#include "fermiq/config.hpp"
#include "fermiq/error.hpp"
#include "fermiq/integrals.hpp"
#include "fermiq/pauli_sum.hpp"

namespace fermiq {

/// Coefficients of each operator class. Keys hold the indices of the
/// representative term; its Hermitian partner is implied.
struct OperatorClasses {
  std::map<std::size_t, complex> number;                        ///< i
  std::map<std::array<std::size_t, 2>, complex> excitation;     ///< (i, j), i < j
  std::map<std::array<std::size_t, 2>, complex> coulomb;        ///< (p, q), p < q
  std::map<std::array<std::size_t, 3>, complex> number_excitation;  ///< (i, m, k), i < k
  std::map<std::array<std::size_t, 4>, complex> double_excitation;  ///< (p, q, r, s)
};

namespace detail {

inline void require_conjugate(complex a, complex b, const std::string& what) {
  if (std::abs(a - std::conj(b)) > 1e-10)
    throw ValidationError(what + " has no Hermitian partner");
}

template <class Map>
void drop_small(Map& m) {
  std::erase_if(m, [](const auto& kv) { return std::abs(kv.second) < kDropTolerance; });
}

}  // namespace detail

/// Normal-orders the integral sums into operator classes.
inline OperatorClasses classify(const IntegralTable& t) {
  t.validate();
  OperatorClasses c;

  for (const auto& [key, h] : t.one_body) {
    const auto [i, j] = key;
    if (i == j) {
      if (std::abs(h.imag()) > 1e-10) throw ValidationError("complex diagonal h1");
      c.number[i] += h.real();
    } else if (i < j) {
      c.excitation[{i, j}] += h;
    }
  }

  // a_p^+ a_q^+ a_r a_s with p < q and r < s, before pairing.
  std::map<std::array<std::size_t, 3>, complex> ne_raw;
  std::map<std::array<std::size_t, 4>, complex> de_raw;
  for (const auto& [key, h] : t.two_body) {
    auto [i, j, k, l] = key;
    if (i == j || k == l) continue;
    complex v = 0.5 * h;
    if (i > j) std::swap(i, j), v = -v;
    if (k > l) std::swap(k, l), v = -v;
    if (i == k && j == l) {
      // a_i^+ a_j^+ a_i a_j = -n_i n_j
      c.coulomb[{i, j}] -= v;
      continue;
    }
    std::size_t shared = t.n;
    if (i == k || i == l) shared = i;
    if (j == k || j == l) shared = j;
    if (shared != t.n) {
      // Move the shared index to the inner positions a_x^+ a_m^+ a_m a_y.
      const std::size_t x = i == shared ? j : i;
      const std::size_t y = k == shared ? l : k;
      if (i == shared) v = -v;
      if (l == shared) v = -v;
      ne_raw[{x, shared, y}] += v;
      continue;
    }
    de_raw[{i, j, k, l}] += v;
  }

  for (const auto& [key, v] : ne_raw) {
    const auto [x, m, y] = key;
    auto partner = ne_raw.find({y, m, x});
    const complex w = partner == ne_raw.end() ? complex{} : partner->second;
    detail::require_conjugate(v, w, "number-excitation term");
    if (x < y) c.number_excitation[key] = v;
  }
  for (const auto& [key, v] : de_raw) {
    const std::array<std::size_t, 4> adj{key[2], key[3], key[0], key[1]};
    auto partner = de_raw.find(adj);
    const complex w = partner == de_raw.end() ? complex{} : partner->second;
    detail::require_conjugate(v, w, "double-excitation term");
    if (key < adj) c.double_excitation[key] = v;
  }

  detail::drop_small(c.number);
  detail::drop_small(c.excitation);
  detail::drop_small(c.coulomb);
  detail::drop_small(c.number_excitation);
  detail::drop_small(c.double_excitation);
  for (const auto& [k, v] : c.coulomb)
    if (std::abs(v.imag()) > 1e-10) throw ValidationError("complex Coulomb coefficient");
  return c;
}

inline PauliSum build_hamiltonian(const OperatorClasses& c, EncodingKind kind,
                                  std::size_t n) {
  PauliSum h(n);
  for (const auto& [i, v] : c.number) h += v * number_operator(kind, i, n);
  for (const auto& [k, v] : c.excitation)
    h += excitation_operator(kind, k[0], k[1], v, n);
  for (const auto& [k, v] : c.coulomb)
    h += v.real() * coulomb_exchange(kind, k[0], k[1], n);
  for (const auto& [k, v] : c.number_excitation)
    h += number_excitation_operator(kind, k[0], k[1], k[2], v, n);
  for (const auto& [k, v] : c.double_excitation)
    h += double_excitation_operator(kind, k[0], k[1], k[2], k[3], v, n);
  return h;
}

inline PauliSum build_hamiltonian(const IntegralTable& t, EncodingKind kind) {
  return build_hamiltonian(classify(t), kind, t.n);
}

/// Terms split into groups whose members pairwise commute.
struct PartitionedHamiltonian {
  PauliSum full;
  std::vector<PauliSum> parts;
};

/// Greedy first fit in canonical term order.
inline PartitionedHamiltonian partition_commuting(const PauliSum& h) {
  PartitionedHamiltonian out{h, {}};
  std::vector<std::vector<PauliString>> groups;
  for (const auto& [key, p] : h) {
    auto fits = [&p](const std::vector<PauliString>& g) {
      return std::all_of(g.begin(), g.end(),
                         [&p](const PauliString& q) { return p.commutes_with(q); });
    };
    auto it = std::find_if(groups.begin(), groups.end(), fits);
    if (it == groups.end())
      groups.push_back({p});
    else
      it->push_back(p);
  }
  for (const auto& g : groups) {
    PauliSum part(h.size());
    for (const auto& p : g) part.add(p);
    out.parts.push_back(std::move(part));
  }
  return out;
}

}  // namespace fermiq
