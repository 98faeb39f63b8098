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
 * Encoding-free matrices of fermionic operators in the occupation basis.
 * Basis index bit j is f_j.
 */
#pragma once

#include <bit>
#include <cstddef>
#include <utility>
#include <vector>

#include "fermiq/dense.hpp"
#include "fermiq/error.hpp"

namespace fermiq {

/// coefficient * op_0 op_1 ... op_{k-1}; the rightmost factor acts first.
struct FermionOperator {
  struct Factor {
    std::size_t mode;
    bool dagger;
  };
  std::vector<Factor> factors;
  complex coefficient{1.0, 0.0};
};

/// a_j^dagger (dagger) or a_j on n modes.
inline Matrix fermion_mode_matrix(bool dagger, std::size_t j, std::size_t n,
                                  std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_width(n, cap);
  detail::require(j < n, "mode index out of range");
  const std::size_t dim = std::size_t{1} << n;
  Matrix m = Matrix::Zero(dim, dim);
  const std::size_t bit = std::size_t{1} << j;
  for (std::size_t s = 0; s < dim; ++s) {
    if (static_cast<bool>(s & bit) == dagger) continue;
    const double sign = std::popcount(s & (bit - 1)) % 2 ? -1.0 : 1.0;
    m(s ^ bit, s) = sign;
  }
  return m;
}

inline Matrix fermionic_oracle(const FermionOperator& op, std::size_t n,
                               std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_width(n, cap);
  const std::size_t dim = std::size_t{1} << n;
  Matrix m = Matrix::Identity(dim, dim);
  for (const auto& f : op.factors) m = m * fermion_mode_matrix(f.dagger, f.mode, n, cap);
  return op.coefficient * m;
}

}  // namespace fermiq
