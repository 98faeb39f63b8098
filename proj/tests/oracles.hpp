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

// Reference implementations used only by the tests. None of them share code
// paths with the library beyond the public value types.
#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermiq.hpp"

namespace oracle {

using fermiq::complex;
using fermiq::Matrix;
using Bits = std::vector<std::vector<int>>;

// GF(2) -------------------------------------------------------------------

inline Bits to_bits(const fermiq::BinaryMatrix& m) {
  Bits b(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) b[i][j] = m.get(i, j);
  return b;
}

inline Bits multiply(const Bits& a, const Bits& b) {
  const std::size_t n = a.size();
  Bits c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      int s = 0;
      for (std::size_t k = 0; k < n; ++k) s ^= a[i][k] & b[k][j];
      c[i][j] = s;
    }
  return c;
}

/// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Bits> inverse(Bits a) {
  const std::size_t n = a.size();
  Bits inv(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && !a[piv][col]) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != col && a[r][col])
        for (std::size_t k = 0; k < n; ++k) a[r][k] ^= a[col][k], inv[r][k] ^= inv[col][k];
  }
  return inv;
}

inline bool is_identity(const Bits& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j)) return false;
  return true;
}

/// beta_n straight from the Fig. 2 doubling description, using nested
/// vectors and the block picture rather than the library's builder.
inline Bits beta(std::size_t n) {
  Bits b{{1}};
  while (b.size() < n) {
    const std::size_t h = b.size();
    Bits next(2 * h, std::vector<int>(2 * h));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) next[i][j] = next[i + h][j + h] = b[i][j];
    for (std::size_t j = 0; j < h; ++j) next[2 * h - 1][j] = 1;
    b = next;
  }
  Bits out(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = b[i][j];
  return out;
}

/// P(j): BK qubits whose XOR is f_0 + ... + f_{j-1}, via b = beta f.
inline std::vector<std::size_t> parity_set(std::size_t j, std::size_t n) {
  const Bits binv = *inverse(beta(n));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < n; ++k) {
    int c = 0;
    for (std::size_t s = 0; s < j; ++s) c ^= binv[s][k];
    if (c) out.push_back(k);
  }
  return out;
}

/// U(j): qubits other than j whose stored sum includes f_j.
inline std::vector<std::size_t> update_set(std::size_t j, std::size_t n) {
  const Bits b = beta(n);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != j && b[i][j]) out.push_back(i);
  return out;
}

/// F(j): qubits k < j whose XOR equals b_j - f_j.
inline std::vector<std::size_t> flip_set(std::size_t j, std::size_t n) {
  const Bits binv = *inverse(beta(n));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j; ++k)
    if (binv[j][k]) out.push_back(k);
  return out;
}

// Pauli matrices ------------------------------------------------------------

inline Matrix single(char label) {
  Matrix m(2, 2);
  const complex i{0.0, 1.0};
  switch (label) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1;
  }
  return m;
}

/// Kronecker product with qubit n-1 as the leftmost factor.
inline Matrix kron_matrix(const fermiq::PauliString& p) {
  Matrix m = Matrix::Identity(1, 1);
  for (char c : p.pattern()) {
    const Matrix s = single(c);
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index k = 0; k < m.cols(); ++k) next.block(2 * r, 2 * k, 2, 2) = m(r, k) * s;
    m = next;
  }
  return p.coefficient() * m;
}

inline Matrix kron_matrix(const fermiq::PauliSum& s) {
  const std::size_t dim = std::size_t{1} << s.size();
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [k, p] : s) m += kron_matrix(p);
  return m;
}

inline fermiq::PauliString random_string(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> lab(0, 3);
  std::normal_distribution<double> g;
  std::string pat;
  for (std::size_t q = 0; q < n; ++q) pat += "IXYZ"[lab(rng)];
  return fermiq::PauliString::from_pattern(pat, {g(rng), g(rng)});
}

// Encodings -----------------------------------------------------------------

/// Permutation sending occupation basis state f to its encoded basis state.
inline Matrix encoding_permutation(fermiq::EncodingKind kind, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Bits map(n, std::vector<int>(n));
  if (kind == fermiq::EncodingKind::bravyi_kitaev) {
    map = beta(n);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        map[i][j] = kind == fermiq::EncodingKind::parity ? j <= i : j == i;
  }
  Matrix perm = Matrix::Zero(dim, dim);
  for (std::size_t f = 0; f < dim; ++f) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int bit = 0;
      for (std::size_t j = 0; j < n; ++j) bit ^= map[i][j] & int((f >> j) & 1);
      e |= std::size_t(bit) << i;
    }
    perm(e, f) = 1.0;
  }
  return perm;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
