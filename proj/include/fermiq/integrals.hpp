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
 * One- and two-electron integral tables and their text format.
 *
 *   # comment
 *   n 4
 *   h1 i j re [im]
 *   h2 i j k l re [im]
 *
 * h2 i j k l multiplies (1/2) a_i^dagger a_j^dagger a_k a_l. Entries not
 * listed are zero.
 */
#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fermiq/config.hpp"
#include "fermiq/error.hpp"
#include "fermiq/pauli_string.hpp"

namespace fermiq {

struct IntegralTable {
  using OneBodyKey = std::array<std::size_t, 2>;
  using TwoBodyKey = std::array<std::size_t, 4>;

  std::size_t n = 0;
  std::map<OneBodyKey, complex> one_body;
  std::map<TwoBodyKey, complex> two_body;
  std::string metadata;

  complex h1(std::size_t i, std::size_t j) const {
    auto it = one_body.find({i, j});
    return it == one_body.end() ? complex{} : it->second;
  }
  complex h2(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    auto it = two_body.find({i, j, k, l});
    return it == two_body.end() ? complex{} : it->second;
  }

  /// Throws ValidationError on out-of-range indices or broken Hermiticity
  /// (h_ij = conj(h_ji), h_ijkl = conj(h_lkji)).
  void validate(double tol = kDropTolerance) const {
    if (n == 0 || n > kMaxOrbitals)
      throw ValidationError("orbital count " + std::to_string(n) + " out of range");
    for (const auto& [key, v] : one_body) {
      if (key[0] >= n || key[1] >= n) throw ValidationError("h1 index out of range");
      if (std::abs(v - std::conj(h1(key[1], key[0]))) > tol)
        throw ValidationError("h1 " + std::to_string(key[0]) + " " +
                              std::to_string(key[1]) + " is not Hermitian");
    }
    for (const auto& [key, v] : two_body) {
      for (std::size_t idx : key)
        if (idx >= n) throw ValidationError("h2 index out of range");
      if (std::abs(v - std::conj(h2(key[3], key[2], key[1], key[0]))) > tol)
        throw ValidationError("h2 " + std::to_string(key[0]) + " " +
                              std::to_string(key[1]) + " " + std::to_string(key[2]) +
                              " " + std::to_string(key[3]) + " is not Hermitian");
    }
  }
};

namespace detail {

inline std::size_t parse_index(const std::string& s, std::size_t line) {
  char* end = nullptr;
  if (s.empty() || s[0] == '-') throw ParseError("bad index '" + s + "'", line);
  const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
  if (*end) throw ParseError("bad index '" + s + "'", line);
  return static_cast<std::size_t>(v);
}

inline double parse_real(const std::string& s, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end || !std::isfinite(v))
    throw ParseError("bad number '" + s + "'", line);
  return v;
}

}  // namespace detail

inline IntegralTable load_integrals(std::istream& is) {
  IntegralTable t;
  std::string line;
  std::size_t lineno = 0;
  bool have_n = false;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string note = line.substr(hash + 1);
      if (!note.empty() && note[0] == ' ') note.erase(0, 1);
      t.metadata += note + '\n';
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> f;
    for (std::string w; ls >> w;) f.push_back(w);
    if (f.empty()) continue;

    if (f[0] == "n") {
      if (have_n) throw ParseError("duplicate orbital count", lineno);
      if (f.size() != 2) throw ParseError("expected 'n <count>'", lineno);
      t.n = detail::parse_index(f[1], lineno);
      if (t.n == 0 || t.n > kMaxOrbitals)
        throw ValidationError("line " + std::to_string(lineno) + ": orbital count " +
                              f[1] + " out of range");
      have_n = true;
      continue;
    }
    if (!have_n) throw ParseError("orbital count must precede integrals", lineno);

    const std::size_t arity = f[0] == "h1" ? 2 : f[0] == "h2" ? 4 : 0;
    if (!arity) throw ParseError("unknown record '" + f[0] + "'", lineno);
    if (f.size() != arity + 2 && f.size() != arity + 3)
      throw ParseError("wrong field count for " + f[0], lineno);
    std::array<std::size_t, 4> idx{};
    for (std::size_t a = 0; a < arity; ++a) {
      idx[a] = detail::parse_index(f[1 + a], lineno);
      if (idx[a] >= t.n)
        throw ValidationError("line " + std::to_string(lineno) + ": index " +
                              f[1 + a] + " out of range");
    }
    const complex v{detail::parse_real(f[1 + arity], lineno),
                    f.size() == arity + 3 ? detail::parse_real(f[2 + arity], lineno)
                                          : 0.0};
    const bool fresh =
        arity == 2 ? t.one_body.emplace(IntegralTable::OneBodyKey{idx[0], idx[1]}, v).second
                   : t.two_body.emplace(idx, v).second;
    if (!fresh) throw ParseError("duplicate " + f[0] + " record", lineno);
  }
  if (!have_n) throw ParseError("missing orbital count");
  t.validate();
  return t;
}

inline IntegralTable load_integrals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_integrals(in);
}

}  // namespace fermiq
