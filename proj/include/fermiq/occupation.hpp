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
#include <string>
#include <string_view>
#include <vector>

#include "fermiq/binary_matrix.hpp"
#include "fermiq/error.hpp"

namespace fermiq {

enum class Basis { occupation, parity, bravyi_kitaev };

inline std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::occupation: return "occupation";
    case Basis::parity: return "parity";
    case Basis::bravyi_kitaev: return "bravyi-kitaev";
  }
  return "?";
}

/// A computational basis state of n qubits together with the meaning of its
/// bits. bits()[j] is qubit j.
class OccupationVector {
 public:
  OccupationVector(std::vector<bool> bits, Basis basis)
      : bits_(std::move(bits)), basis_(basis) {}

  /// Parses a ket label written most-significant first, e.g. "10100111" is
  /// f_7 ... f_0.
  static OccupationVector from_ket(std::string_view ket,
                                   Basis basis = Basis::occupation) {
    std::vector<bool> bits(ket.size());
    for (std::size_t k = 0; k < ket.size(); ++k) {
      const char c = ket[ket.size() - 1 - k];
      if (c != '0' && c != '1') throw ParseError("ket label must be binary");
      bits[k] = c == '1';
    }
    return {std::move(bits), basis};
  }

  std::size_t size() const noexcept { return bits_.size(); }
  Basis basis() const noexcept { return basis_; }
  const std::vector<bool>& bits() const noexcept { return bits_; }
  bool operator[](std::size_t j) const { return bits_[j]; }

  std::string to_ket() const {
    std::string s(bits_.size(), '0');
    for (std::size_t k = 0; k < bits_.size(); ++k)
      if (bits_[k]) s[bits_.size() - 1 - k] = '1';
    return s;
  }

  bool operator==(const OccupationVector&) const = default;

 private:
  std::vector<bool> bits_;
  Basis basis_;
};

namespace detail {

inline BinaryMatrix forward_matrix(Basis b, std::size_t n) {
  switch (b) {
    case Basis::occupation: return BinaryMatrix::identity(n);
    case Basis::parity: return build_pi(n);
    case Basis::bravyi_kitaev: return build_beta(n);
  }
  return BinaryMatrix::identity(n);
}

inline BinaryMatrix inverse_matrix(Basis b, std::size_t n) {
  switch (b) {
    case Basis::occupation: return BinaryMatrix::identity(n);
    case Basis::parity: {
      // f_j = p_j + p_{j-1}
      BinaryMatrix m = BinaryMatrix::identity(n);
      for (std::size_t j = 1; j < n; ++j) m.set(j, j - 1, true);
      return m;
    }
    case Basis::bravyi_kitaev: return build_beta_inverse(n);
  }
  return BinaryMatrix::identity(n);
}

}  // namespace detail

/// Re-expresses a basis state in `target`. Any source basis is accepted; the
/// state is first brought back to occupation numbers.
inline OccupationVector encode_state(const OccupationVector& v, Basis target) {
  const std::size_t n = v.size();
  detail::check_orbital_count(n);
  std::vector<bool> occ = v.basis() == Basis::occupation
                              ? v.bits()
                              : detail::inverse_matrix(v.basis(), n).apply(v.bits());
  if (target == Basis::occupation) return {std::move(occ), target};
  return {detail::forward_matrix(target, n).apply(occ), target};
}

}  // namespace fermiq
