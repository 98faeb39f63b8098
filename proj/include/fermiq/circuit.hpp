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
#include <cstddef>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "fermiq/error.hpp"
#include "fermiq/pauli_sum.hpp"

namespace fermiq {

struct Cnot {
  std::size_t control, target;
};
/// exp(-i angle Z / 2)
struct Rz {
  std::size_t qubit;
  double angle;
};
struct Hadamard {
  std::size_t qubit;
};
/// (1/sqrt 2) [[1, i], [i, 1]] when forward, its adjoint otherwise.
struct RxBasis {
  std::size_t qubit;
  bool forward;
};
/// Multiplies the state by exp(i angle).
struct GlobalPhase {
  double angle;
};

using Gate = std::variant<Cnot, Rz, Hadamard, RxBasis, GlobalPhase>;

struct GateCount {
  std::size_t sqg = 0;
  std::size_t cnot = 0;
  std::size_t total() const noexcept { return sqg + cnot; }

  GateCount& operator+=(const GateCount& o) {
    sqg += o.sqg;
    cnot += o.cnot;
    return *this;
  }
  friend GateCount operator*(GateCount c, std::size_t k) {
    c.sqg *= k;
    c.cnot *= k;
    return c;
  }
  bool operator==(const GateCount&) const = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  Circuit& push(const Gate& g) {
    std::visit(
        [this](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Cnot>) {
            detail::require(v.control < width_ && v.target < width_ &&
                                v.control != v.target,
                            "bad CNOT qubits");
          } else if constexpr (std::is_same_v<T, GlobalPhase>) {
            detail::require(std::isfinite(v.angle), "non-finite phase");
          } else {
            detail::require(v.qubit < width_, "gate qubit out of range");
            if constexpr (std::is_same_v<T, Rz>)
              detail::require(std::isfinite(v.angle), "non-finite rotation angle");
          }
        },
        g);
    gates_.push_back(g);
    return *this;
  }

  Circuit& append(const Circuit& o) {
    detail::require(o.width_ == width_, "circuit width mismatch");
    gates_.insert(gates_.end(), o.gates_.begin(), o.gates_.end());
    return *this;
  }

 private:
  std::size_t width_ = 0;
  std::vector<Gate> gates_;
};

/// Global phases are not counted.
inline GateCount gate_count(const Circuit& c) {
  GateCount n;
  for (const Gate& g : c.gates()) {
    if (std::holds_alternative<Cnot>(g))
      ++n.cnot;
    else if (!std::holds_alternative<GlobalPhase>(g))
      ++n.sqg;
  }
  return n;
}

inline void write_circuit(std::ostream& os, const Circuit& c) {
  os << "width " << c.width() << '\n';
  for (const Gate& g : c.gates()) {
    std::visit(
        [&os](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Cnot>)
            os << "CNOT " << v.control << ' ' << v.target;
          else if constexpr (std::is_same_v<T, Rz>)
            os << "RZ " << v.qubit << ' ' << detail::format_double(v.angle);
          else if constexpr (std::is_same_v<T, Hadamard>)
            os << "H " << v.qubit;
          else if constexpr (std::is_same_v<T, RxBasis>)
            os << (v.forward ? "RXF " : "RXI ") << v.qubit;
          else
            os << "GPHASE " << detail::format_double(v.angle);
        },
        g);
    os << '\n';
  }
}

inline Circuit read_circuit(std::istream& is) {
  std::string line;
  std::size_t lineno = 0;
  Circuit c;
  bool have_width = false;
  auto index = [&lineno](std::istringstream& ls) {
    long long q = -1;
    if (!(ls >> q) || q < 0) throw ParseError("bad qubit index", lineno);
    return static_cast<std::size_t>(q);
  };
  auto angle = [&lineno](std::istringstream& ls) {
    std::string s;
    ls >> s;
    char* end = nullptr;
    const double a = std::strtod(s.c_str(), &end);
    if (s.empty() || *end) throw ParseError("bad angle '" + s + "'", lineno);
    return a;
  };
  while (std::getline(is, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    if (op == "width") {
      if (have_width) throw ParseError("duplicate width", lineno);
      c = Circuit(index(ls));
      have_width = true;
      continue;
    }
    if (!have_width) throw ParseError("width must come first", lineno);
    try {
      if (op == "CNOT") {
        const std::size_t ctl = index(ls);
        c.push(Cnot{ctl, index(ls)});
      } else if (op == "RZ") {
        const std::size_t q = index(ls);
        c.push(Rz{q, angle(ls)});
      } else if (op == "H") {
        c.push(Hadamard{index(ls)});
      } else if (op == "RXF" || op == "RXI") {
        c.push(RxBasis{index(ls), op == "RXF"});
      } else if (op == "GPHASE") {
        c.push(GlobalPhase{angle(ls)});
      } else {
        throw ParseError("unknown gate '" + op + "'", lineno);
      }
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), lineno);
    }
    std::string extra;
    if (ls >> extra) throw ParseError("trailing field '" + extra + "'", lineno);
  }
  if (!have_width) throw ParseError("missing width header");
  return c;
}

}  // namespace fermiq
