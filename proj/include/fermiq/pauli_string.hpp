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
 * Weighted tensor products of single-qubit Pauli matrices in symplectic
 * form. Qubit q carries bit q of the X word and bit q of the Z word:
 *
 *   (x, z) = (0, 0) -> I, (1, 0) -> X, (1, 1) -> Y, (0, 1) -> Z
 *
 * The label Y stands for the Pauli Y matrix itself, so a string's operator is
 * coefficient() times the plain tensor product of its labels.
 */
#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fermiq/error.hpp"
#include "fermiq/index_set.hpp"

namespace fermiq {

using complex = std::complex<double>;

class PauliString {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PauliString() = default;

  /// Identity on n qubits.
  explicit PauliString(std::size_t n, complex coefficient = 1.0)
      : n_(n),
        x_((n + kWordBits - 1) / kWordBits, 0),
        z_(x_.size(), 0),
        coeff_(coefficient) {}

  /// Pattern written qubit n-1 first, e.g. "ZIXY" has Y on qubit 0.
  static PauliString from_pattern(std::string_view pattern,
                                  complex coefficient = 1.0) {
    PauliString p(pattern.size(), coefficient);
    for (std::size_t k = 0; k < pattern.size(); ++k)
      p.set(pattern.size() - 1 - k, pattern[k]);
    return p;
  }

  /// Same label on every qubit of `support`.
  static PauliString on(std::size_t n, const IndexSet& support, char label,
                        complex coefficient = 1.0) {
    PauliString p(n, coefficient);
    for (std::size_t q : support) p.set(q, label);
    return p;
  }

  std::size_t size() const noexcept { return n_; }
  complex coefficient() const noexcept { return coeff_; }
  void set_coefficient(complex c) noexcept { coeff_ = c; }

  bool x(std::size_t q) const { return bit(x_, q); }
  bool z(std::size_t q) const { return bit(z_, q); }

  char label(std::size_t q) const {
    check(q);
    static constexpr char kLabels[] = {'I', 'Z', 'X', 'Y'};
    return kLabels[2 * x(q) + z(q)];
  }

  void set(std::size_t q, char label) {
    check(q);
    bool xb = false, zb = false;
    switch (label) {
      case 'I': break;
      case 'X': xb = true; break;
      case 'Y': xb = zb = true; break;
      case 'Z': zb = true; break;
      default:
        throw ParseError(std::string("unknown Pauli label '") + label + "'");
    }
    assign(x_, q, xb);
    assign(z_, q, zb);
  }

  /// Labels from qubit n-1 down to 0.
  std::string pattern() const {
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) s[n_ - 1 - q] = label(q);
    return s;
  }

  std::size_t weight() const noexcept {
    std::size_t w = 0;
    for (std::size_t k = 0; k < x_.size(); ++k) w += std::popcount(x_[k] | z_[k]);
    return w;
  }

  bool is_identity() const noexcept { return weight() == 0; }

  /// Qubits with a non-identity factor, ascending.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < x_.size(); ++k) {
      word_type w = x_[k] | z_[k];
      while (w) {
        out.push_back(k * kWordBits + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  const std::vector<word_type>& x_words() const noexcept { return x_; }
  const std::vector<word_type>& z_words() const noexcept { return z_; }

  bool same_pattern(const PauliString& o) const noexcept {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
  }

  bool commutes_with(const PauliString& o) const {
    detail::require(n_ == o.n_, "Pauli string width mismatch");
    std::size_t anti = 0;
    for (std::size_t k = 0; k < x_.size(); ++k)
      anti += std::popcount((x_[k] & o.z_[k]) ^ (z_[k] & o.x_[k]));
    return anti % 2 == 0;
  }

  friend PauliString operator*(const PauliString& a, const PauliString& b) {
    detail::require(a.n_ == b.n_, "Pauli string width mismatch");
    PauliString out(a.n_);
    // Y = i X Z, so each string is i^{|x&z|} X^x Z^z. Moving Z^{z1} past
    // X^{x2} costs (-1)^{|z1&x2|}.
    long k = 0;
    for (std::size_t w = 0; w < a.x_.size(); ++w) {
      out.x_[w] = a.x_[w] ^ b.x_[w];
      out.z_[w] = a.z_[w] ^ b.z_[w];
      k += std::popcount(a.x_[w] & a.z_[w]) + std::popcount(b.x_[w] & b.z_[w]) +
           2 * std::popcount(a.z_[w] & b.x_[w]) -
           std::popcount(out.x_[w] & out.z_[w]);
    }
    out.coeff_ = a.coeff_ * b.coeff_ * i_power(k);
    return out;
  }

  PauliString adjoint() const {
    PauliString out = *this;
    out.coeff_ = std::conj(coeff_);
    return out;
  }

  PauliString scaled(complex s) const {
    PauliString out = *this;
    out.coeff_ *= s;
    return out;
  }

  /// Exact i^k.
  static complex i_power(long k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }

 private:
  void check(std::size_t q) const {
    if (q >= n_)
      throw PreconditionError("qubit " + std::to_string(q) + " out of range for width " +
                              std::to_string(n_));
  }
  static bool bit(const std::vector<word_type>& v, std::size_t q) {
    return (v[q / kWordBits] >> (q % kWordBits)) & 1u;
  }
  static void assign(std::vector<word_type>& v, std::size_t q, bool on) {
    const word_type mask = word_type{1} << (q % kWordBits);
    v[q / kWordBits] = on ? (v[q / kWordBits] | mask) : (v[q / kWordBits] & ~mask);
  }

  std::size_t n_ = 0;
  std::vector<word_type> x_;
  std::vector<word_type> z_;
  complex coeff_{1.0, 0.0};
};

}  // namespace fermiq
