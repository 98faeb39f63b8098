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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "fermiq/config.hpp"
#include "fermiq/error.hpp"
#include "fermiq/pauli_sum.hpp"

namespace fermiq {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace detail {

inline void check_dense_width(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw PreconditionError("dense realization of " + std::to_string(n) +
                            " qubits exceeds cap of " + std::to_string(cap));
}

inline std::uint64_t low_word(const std::vector<std::uint64_t>& w) {
  return w.empty() ? 0 : w[0];
}

}  // namespace detail

/// Adds the matrix of `p` into `m`. Basis index bit q is qubit q.
inline void accumulate(Matrix& m, const PauliString& p) {
  const std::uint64_t x = detail::low_word(p.x_words());
  const std::uint64_t z = detail::low_word(p.z_words());
  const complex base = p.coefficient() * PauliString::i_power(std::popcount(x & z));
  const std::size_t dim = std::size_t{1} << p.size();
  for (std::size_t col = 0; col < dim; ++col) {
    const bool odd = std::popcount(z & col) & 1;
    m(col ^ x, col) += odd ? -base : base;
  }
}

inline Matrix to_matrix(const PauliString& p, std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_width(p.size(), cap);
  const std::size_t dim = std::size_t{1} << p.size();
  Matrix m = Matrix::Zero(dim, dim);
  accumulate(m, p);
  return m;
}

inline Matrix to_matrix(const PauliSum& s, std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_width(s.size(), cap);
  const std::size_t dim = std::size_t{1} << s.size();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [k, p] : s) accumulate(m, p);
  return m;
}

}  // namespace fermiq
