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
 * Square matrices over GF(2) and the occupation/parity/Bravyi-Kitaev
 * change-of-basis matrices.
 *
 * Entry (i, j) is addressed by orbital/qubit index: row i is the output bit
 * (p_i or b_i) and column j the input bit f_j. Printed forms list row n-1 at
 * the top and column n-1 at the left, so index 0 sits in the lower-right
 * corner as in the usual displayed matrices.
 */
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fermiq/config.hpp"
#include "fermiq/error.hpp"

namespace fermiq {

class BinaryMatrix {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BinaryMatrix() = default;

  explicit BinaryMatrix(std::size_t n)
      : n_(n), words_((n + kWordBits - 1) / kWordBits), bits_(n_ * words_, 0) {}

  static BinaryMatrix identity(std::size_t n) {
    BinaryMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  bool get(std::size_t row, std::size_t col) const {
    return (row_data(row)[col / kWordBits] >> (col % kWordBits)) & 1u;
  }

  void set(std::size_t row, std::size_t col, bool value) {
    word_type& w = row_data(row)[col / kWordBits];
    const word_type mask = word_type{1} << (col % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  /// XOR row `src` into row `dst`.
  void add_row(std::size_t dst, std::size_t src) {
    word_type* d = row_data(dst);
    const word_type* s = row_data(src);
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  /// Leading n x n block, i.e. the segment touching indices 0..n-1.
  BinaryMatrix leading(std::size_t n) const {
    detail::require(n <= n_, "leading block larger than matrix");
    BinaryMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set(i, j, get(i, j));
    return out;
  }

  /// Product over GF(2).
  friend BinaryMatrix operator*(const BinaryMatrix& a, const BinaryMatrix& b) {
    detail::require(a.n_ == b.n_, "binary matrix size mismatch");
    BinaryMatrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      word_type* dst = out.row_data(i);
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (!a.get(i, k)) continue;
        const word_type* src = b.row_data(k);
        for (std::size_t w = 0; w < a.words_; ++w) dst[w] ^= src[w];
      }
    }
    return out;
  }

  /// Matrix-vector product over GF(2); bits[j] is component j.
  std::vector<bool> apply(const std::vector<bool>& bits) const {
    detail::require(bits.size() == n_, "bit vector length does not match matrix");
    std::vector<bool> out(n_, false);
    for (std::size_t i = 0; i < n_; ++i) {
      bool acc = false;
      for (std::size_t j = 0; j < n_; ++j) acc ^= (get(i, j) && bits[j]);
      out[i] = acc;
    }
    return out;
  }

  /// Indices j with entry (row, j) set, ascending.
  std::vector<std::size_t> row_support(std::size_t row) const {
    std::vector<std::size_t> out;
    const word_type* r = row_data(row);
    for (std::size_t w = 0; w < words_; ++w) {
      word_type bits = r[w];
      while (bits) {
        out.push_back(w * kWordBits + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// Indices i with entry (i, col) set, ascending.
  std::vector<std::size_t> column_support(std::size_t col) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i, col)) out.push_back(i);
    return out;
  }

  bool operator==(const BinaryMatrix& other) const = default;

  /// Rows from n-1 down to 0, columns from n-1 down to 0, one row per line.
  std::string to_string() const {
    std::string out;
    out.reserve(n_ * (2 * n_ + 1));
    for (std::size_t r = n_; r-- > 0;) {
      for (std::size_t c = n_; c-- > 0;) {
        out.push_back(get(r, c) ? '1' : '0');
        if (c) out.push_back(' ');
      }
      out.push_back('\n');
    }
    return out;
  }

 private:
  word_type* row_data(std::size_t row) { return bits_.data() + row * words_; }
  const word_type* row_data(std::size_t row) const {
    return bits_.data() + row * words_;
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<word_type> bits_;
};

namespace detail {

inline void check_orbital_count(std::size_t n) {
  require(n >= 1, "orbital count must be positive");
  require(n <= kMaxOrbitals,
          "orbital count exceeds limit of " + std::to_string(kMaxOrbitals));
}

}  // namespace detail

/// Cumulative parity map p_i = f_0 + ... + f_i (mod 2).
inline BinaryMatrix build_pi(std::size_t n) {
  detail::check_orbital_count(n);
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, true);
  return m;
}

/// Prefix parity of the orbitals strictly below i: row i sums f_0..f_{i-1}.
inline BinaryMatrix build_strict_prefix_parity(std::size_t n) {
  detail::check_orbital_count(n);
  BinaryMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m.set(i, j, true);
  return m;
}

/// Occupation to Bravyi-Kitaev map. Built at the next power of two by
/// doubling (two diagonal copies plus a full top row over the lower half)
/// and cut down to the leading n x n block.
inline BinaryMatrix build_beta(std::size_t n) {
  detail::check_orbital_count(n);
  BinaryMatrix m = BinaryMatrix::identity(1);
  for (std::size_t half = 1; half < n; half *= 2) {
    BinaryMatrix next(2 * half);
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < half; ++j) {
        const bool v = m.get(i, j);
        next.set(i, j, v);
        next.set(i + half, j + half, v);
      }
    for (std::size_t j = 0; j < half; ++j) next.set(2 * half - 1, j, true);
    m = std::move(next);
  }
  return m.size() == n ? m : m.leading(n);
}

/// Bravyi-Kitaev to occupation map, by the matching doubling recursion:
/// two diagonal copies of the half-size inverse plus one extra entry linking
/// the top row to the top qubit of the lower half.
inline BinaryMatrix build_beta_inverse(std::size_t n) {
  detail::check_orbital_count(n);
  BinaryMatrix m = BinaryMatrix::identity(1);
  for (std::size_t half = 1; half < n; half *= 2) {
    BinaryMatrix next(2 * half);
    for (std::size_t i = 0; i < half; ++i)
      for (std::size_t j = 0; j < half; ++j) {
        const bool v = m.get(i, j);
        next.set(i, j, v);
        next.set(i + half, j + half, v);
      }
    next.set(2 * half - 1, half - 1, true);
    m = std::move(next);
  }
  return m.size() == n ? m : m.leading(n);
}

/// Bravyi-Kitaev to parity map (pi * beta^-1).
inline BinaryMatrix build_bk_to_parity(std::size_t n) {
  return build_pi(n) * build_beta_inverse(n);
}

}  // namespace fermiq
