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
#pragma once

#include <cstddef>

#include "fermiq/encoding.hpp"
#include "fermiq/error.hpp"
#include "fermiq/pauli_sum.hpp"

namespace fermiq {

// Every composite is a product of encoded mode operators, collected.

inline PauliSum number_operator(EncodingKind kind, std::size_t i, std::size_t n) {
  return creation(kind, i, n) * annihilation(kind, i, n);
}

/// n_i n_j, i.e. a_i^dagger a_j^dagger a_j a_i.
inline PauliSum coulomb_exchange(EncodingKind kind, std::size_t i, std::size_t j,
                                 std::size_t n) {
  detail::require(i != j, "Coulomb/exchange operator needs distinct indices");
  return number_operator(kind, i, n) * number_operator(kind, j, n);
}

/// a_i^dagger a_j for i != j. For i > j this is the adjoint of (j, i).
inline PauliSum hopping_product(EncodingKind kind, std::size_t i, std::size_t j,
                                std::size_t n) {
  detail::require(i != j, "hopping product needs distinct indices; use number_operator");
  if (i > j) return hopping_product(kind, j, i, n).adjoint();
  return creation(kind, i, n) * annihilation(kind, j, n);
}

/// h a_i^dagger a_j + conj(h) a_j^dagger a_i.
inline PauliSum excitation_operator(EncodingKind kind, std::size_t i, std::size_t j,
                                    complex h, std::size_t n) {
  detail::require(i != j, "excitation operator needs distinct indices");
  const PauliSum t = hopping_product(kind, i, j, n);
  return h * t + std::conj(h) * t.adjoint();
}

/// h a_i^dagger a_j^dagger a_j a_k + h.c.
inline PauliSum number_excitation_operator(EncodingKind kind, std::size_t i,
                                           std::size_t j, std::size_t k, complex h,
                                           std::size_t n) {
  detail::require(i != j && j != k && i != k,
                  "number-excitation operator needs distinct indices");
  return excitation_operator(kind, i, k, h, n) * number_operator(kind, j, n);
}

/// h a_i^dagger a_j^dagger a_k a_l + h.c.
inline PauliSum double_excitation_operator(EncodingKind kind, std::size_t i,
                                           std::size_t j, std::size_t k, std::size_t l,
                                           complex h, std::size_t n) {
  detail::require(i != j && i != k && i != l && j != k && j != l && k != l,
                  "double-excitation operator needs distinct indices");
  const PauliSum t = hopping_product(kind, i, l, n) * hopping_product(kind, j, k, n);
  return h * t + std::conj(h) * t.adjoint();
}

}  // namespace fermiq
