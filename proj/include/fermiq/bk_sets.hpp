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
 * Parity, update, flip and remainder sets of the Bravyi-Kitaev encoding,
 * read off the change-of-basis matrices.
 *
 *  - P(j): qubits whose joint parity equals f_0 + ... + f_{j-1}.
 *  - U(j): qubits other than j whose stored partial sum contains f_j.
 *  - F(j): qubits whose joint parity is b_j - f_j.
 *  - R(j) = P(j) \ F(j); rho(j) is P(j) for even j and R(j) for odd j.
 */
#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "fermiq/binary_matrix.hpp"
#include "fermiq/error.hpp"
#include "fermiq/index_set.hpp"

namespace fermiq {

/// All single-index sets for one orbital count, computed once.
class SetTable {
 public:
  explicit SetTable(std::size_t n) : n_(n) {
    const BinaryMatrix beta = build_beta(n);
    const BinaryMatrix beta_inv = build_beta_inverse(n);
    // Row j of this product expresses f_0 + ... + f_{j-1} in BK qubits.
    const BinaryMatrix below = build_strict_prefix_parity(n) * beta_inv;
    parity_.reserve(n);
    update_.reserve(n);
    flip_.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      parity_.emplace_back(strictly_below(below.row_support(j), j));
      flip_.emplace_back(strictly_below(beta_inv.row_support(j), j));
      std::vector<std::size_t> up;
      for (std::size_t i = j + 1; i < n; ++i)
        if (beta.get(i, j)) up.push_back(i);
      update_.emplace_back(std::move(up));
    }
  }

  std::size_t size() const noexcept { return n_; }

  const IndexSet& parity(std::size_t j) const { return parity_.at(check(j)); }
  const IndexSet& update(std::size_t j) const { return update_.at(check(j)); }
  const IndexSet& flip(std::size_t j) const { return flip_.at(check(j)); }
  IndexSet remainder(std::size_t j) const { return parity(j) - flip(j); }
  IndexSet rho(std::size_t j) const {
    return j % 2 == 0 ? parity(j) : remainder(j);
  }
  /// F(j) with j itself added.
  IndexSet flip_closure(std::size_t j) const { return flip(j) | IndexSet{j}; }

 private:
  std::size_t check(std::size_t j) const {
    if (j >= n_)
      throw PreconditionError("index " + std::to_string(j) +
                              " out of range for " + std::to_string(n_) +
                              " orbitals");
    return j;
  }

  static IndexSet strictly_below(std::vector<std::size_t> v, std::size_t j) {
    std::erase_if(v, [j](std::size_t k) { return k >= j; });
    return IndexSet(std::move(v));
  }

  std::size_t n_;
  std::vector<IndexSet> parity_;
  std::vector<IndexSet> update_;
  std::vector<IndexSet> flip_;
};

/// Shared, lazily built table for orbital count n. Tables are immutable once
/// published, so callers may hold the reference from any thread.
inline const SetTable& set_table(std::size_t n) {
  detail::check_orbital_count(n);
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const SetTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const SetTable>(n);
  return *slot;
}

inline IndexSet parity_set(std::size_t j, std::size_t n) {
  return set_table(n).parity(j);
}
inline IndexSet update_set(std::size_t j, std::size_t n) {
  return set_table(n).update(j);
}
inline IndexSet flip_set(std::size_t j, std::size_t n) {
  return set_table(n).flip(j);
}
inline IndexSet remainder_set(std::size_t j, std::size_t n) {
  return set_table(n).remainder(j);
}
inline IndexSet rho_set(std::size_t j, std::size_t n) {
  return set_table(n).rho(j);
}

/// Sets used when simplifying products a_i^dagger a_j.
struct PairSets {
  IndexSet remainder_i, remainder_j;
  IndexSet rho_i, rho_j;
  IndexSet flip_closure_i, flip_closure_j;
  IndexSet flip_closure_ij;  ///< symmetric difference of the two closures
  IndexSet update_ij;        ///< U(i) ^ U(j)
  IndexSet alpha_ij;         ///< U(i) & P(j)
  IndexSet p0, p1, p2, p3;   ///< P^P, P^R, R^P, R^R over (i, j)
};

inline PairSets derived_sets(std::size_t i, std::size_t j, std::size_t n) {
  const SetTable& t = set_table(n);
  if (i == j) throw PreconditionError("pair sets need distinct indices");
  PairSets s;
  s.remainder_i = t.remainder(i);
  s.remainder_j = t.remainder(j);
  s.rho_i = t.rho(i);
  s.rho_j = t.rho(j);
  s.flip_closure_i = t.flip_closure(i);
  s.flip_closure_j = t.flip_closure(j);
  s.flip_closure_ij = s.flip_closure_i ^ s.flip_closure_j;
  s.update_ij = t.update(i) ^ t.update(j);
  s.alpha_ij = t.update(i) & t.parity(j);
  s.p0 = t.parity(i) ^ t.parity(j);
  s.p1 = t.parity(i) ^ s.remainder_j;
  s.p2 = s.remainder_i ^ t.parity(j);
  s.p3 = s.remainder_i ^ s.remainder_j;
  return s;
}

/// Plain-text P/U/F/R table, one row per index from n-1 down to 0.
inline std::string tabulate_sets(std::size_t n) {
  const SetTable& t = set_table(n);
  std::ostringstream os;
  os << "j\tP(j)\tU(j)\tF(j)\tR(j)\n";
  for (std::size_t j = n; j-- > 0;) {
    os << j << '\t' << t.parity(j).to_string() << '\t'
       << t.update(j).to_string() << '\t' << t.flip(j).to_string() << '\t'
       << t.remainder(j).to_string() << '\n';
  }
  return os.str();
}

}  // namespace fermiq
