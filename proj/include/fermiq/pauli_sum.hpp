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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fermiq/config.hpp"
#include "fermiq/error.hpp"
#include "fermiq/index_set.hpp"
#include "fermiq/pauli_string.hpp"

namespace fermiq {

/// Linear combination of Pauli strings with collected, pruned terms.
/// Iteration is in canonical order: patterns compared as strings, qubit n-1
/// most significant, I < X < Y < Z.
class PauliSum {
 public:
  using container = std::map<std::string, PauliString>;
  using const_iterator = container::const_iterator;

  PauliSum() = default;
  explicit PauliSum(std::size_t n) : n_(n) {}
  PauliSum(const PauliString& p) : n_(p.size()) { add(p); }  // NOLINT

  static PauliSum identity(std::size_t n, complex c = 1.0) {
    return PauliSum(PauliString(n, c));
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }

  std::vector<PauliString> terms() const {
    std::vector<PauliString> out;
    out.reserve(terms_.size());
    for (const auto& [k, p] : terms_) out.push_back(p);
    return out;
  }

  /// Coefficient of `pattern`, zero when absent.
  complex coefficient(const std::string& pattern) const {
    auto it = terms_.find(pattern);
    return it == terms_.end() ? complex{} : it->second.coefficient();
  }

  PauliSum& add(const PauliString& p) {
    detail::require(p.size() == n_, "Pauli sum width mismatch");
    std::string key = p.pattern();
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (std::abs(p.coefficient()) >= kDropTolerance) terms_.emplace(std::move(key), p);
      return *this;
    }
    const complex c = it->second.coefficient() + p.coefficient();
    if (std::abs(c) < kDropTolerance)
      terms_.erase(it);
    else
      it->second.set_coefficient(c);
    return *this;
  }

  PauliSum& operator+=(const PauliSum& o) {
    detail::require(o.n_ == n_, "Pauli sum width mismatch");
    for (const auto& [k, p] : o.terms_) add(p);
    return *this;
  }
  PauliSum& operator-=(const PauliSum& o) { return *this += o * complex{-1.0}; }

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }

  friend PauliSum operator*(const PauliSum& a, complex s) {
    PauliSum out(a.n_);
    for (const auto& [k, p] : a.terms_) out.add(p.scaled(s));
    return out;
  }
  friend PauliSum operator*(complex s, const PauliSum& a) { return a * s; }

  friend PauliSum operator*(const PauliSum& a, const PauliSum& b) {
    detail::require(a.n_ == b.n_, "Pauli sum width mismatch");
    PauliSum out(a.n_);
    for (const auto& [ka, pa] : a.terms_)
      for (const auto& [kb, pb] : b.terms_) out.add(pa * pb);
    return out;
  }

  PauliSum adjoint() const {
    PauliSum out(n_);
    for (const auto& [k, p] : terms_) out.add(p.adjoint());
    return out;
  }

  /// True when every coefficient is real within `tol`.
  bool is_hermitian(double tol = kDropTolerance) const {
    for (const auto& [k, p] : terms_)
      if (std::abs(p.coefficient().imag()) > tol) return false;
    return true;
  }

  /// Same patterns, coefficients within `tol`.
  bool approx_equal(const PauliSum& o, double tol = kDropTolerance) const {
    if (n_ != o.n_) return false;
    for (const auto& [k, p] : terms_)
      if (std::abs(p.coefficient() - o.coefficient(k)) > tol) return false;
    for (const auto& [k, p] : o.terms_)
      if (std::abs(p.coefficient() - coefficient(k)) > tol) return false;
    return true;
  }

 private:
  std::size_t n_ = 0;
  container terms_;
};

/// Q+ = (X - iY)/2 raises |0> to |1>; Q- = (X + iY)/2 lowers.
enum class Ladder { raise, lower };

inline PauliSum ladder(Ladder kind, std::size_t j, std::size_t n) {
  detail::require(j < n, "ladder index out of range");
  const double s = kind == Ladder::raise ? -0.5 : 0.5;
  PauliSum out(n);
  out.add(PauliString::on(n, {j}, 'X', 0.5));
  out.add(PauliString::on(n, {j}, 'Y', complex{0.0, s}));
  return out;
}

enum class Parity { even, odd };

/// E_S = (1 + Z_S)/2, O_S = (1 - Z_S)/2.
inline PauliSum parity_projector(Parity kind, const IndexSet& s, std::size_t n) {
  detail::require(s.bound() <= n, "parity projector index out of range");
  PauliSum out(n);
  out.add(PauliString(n, 0.5));
  out.add(PauliString::on(n, s, 'Z', kind == Parity::even ? 0.5 : -0.5));
  return out;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace detail

/// One term per line: `<re> <im> <pattern>`.
inline void write_pauli_sum(std::ostream& os, const PauliSum& s) {
  for (const auto& [pattern, p] : s)
    os << detail::format_double(p.coefficient().real()) << ' '
       << detail::format_double(p.coefficient().imag()) << ' ' << pattern << '\n';
}

inline std::string to_string(const PauliSum& s) {
  std::ostringstream os;
  write_pauli_sum(os, s);
  return os.str();
}

/// Inverse of write_pauli_sum. Blank lines and `#` comments are skipped. The
/// width comes from the patterns; `width` is used when there are no terms and
/// checked otherwise (0 means unknown).
inline PauliSum read_pauli_sum(std::istream& is, std::size_t width = 0) {
  std::vector<PauliString> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string re, im, pattern, extra;
    if (!(ls >> re)) continue;
    if (!(ls >> im >> pattern) || (ls >> extra))
      throw ParseError("expected '<re> <im> <pattern>'", lineno);
    char* end = nullptr;
    const double r = std::strtod(re.c_str(), &end);
    if (*end) throw ParseError("bad real part '" + re + "'", lineno);
    const double i = std::strtod(im.c_str(), &end);
    if (*end) throw ParseError("bad imaginary part '" + im + "'", lineno);
    if (width == 0) width = pattern.size();
    if (pattern.size() != width)
      throw ParseError("pattern width " + std::to_string(pattern.size()) +
                           " differs from " + std::to_string(width),
                       lineno);
    try {
      terms.push_back(PauliString::from_pattern(pattern, {r, i}));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  PauliSum out(width);
  for (const auto& p : terms) out.add(p);
  return out;
}

}  // namespace fermiq
