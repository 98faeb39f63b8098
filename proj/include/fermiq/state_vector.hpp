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
#include <type_traits>
#include <variant>

#include "fermiq/circuit.hpp"
#include "fermiq/config.hpp"
#include "fermiq/dense.hpp"
#include "fermiq/error.hpp"

namespace fermiq {

/// Amplitudes over 2^width basis states; index bit q is qubit q.
class StateVector {
 public:
  explicit StateVector(std::size_t width, std::size_t cap = kDefaultDenseCap)
      : width_(width) {
    detail::check_dense_width(width, cap);
    amp_ = Vector::Zero(std::size_t{1} << width);
    amp_(0) = 1.0;
  }

  StateVector(std::size_t width, Vector amplitudes) : width_(width), amp_(std::move(amplitudes)) {
    detail::require(static_cast<std::size_t>(amp_.size()) == (std::size_t{1} << width),
                    "amplitude count does not match width");
  }

  std::size_t width() const noexcept { return width_; }
  const Vector& amplitudes() const noexcept { return amp_; }
  double norm() const { return amp_.norm(); }

  /// <this|other>
  complex inner(const StateVector& other) const { return amp_.dot(other.amp_); }

  void apply(const Gate& g) {
    std::visit([this](const auto& v) { apply_one(v); }, g);
  }

  void apply(const Circuit& c) {
    detail::require(c.width() == width_, "circuit width differs from state width");
    for (const Gate& g : c.gates()) apply(g);
  }

 private:
  std::size_t dim() const { return std::size_t{1} << width_; }

  void apply_one(const Cnot& g) {
    const std::size_t cb = std::size_t{1} << g.control, tb = std::size_t{1} << g.target;
    for (std::size_t s = 0; s < dim(); ++s)
      if ((s & cb) && !(s & tb)) std::swap(amp_(s), amp_(s | tb));
  }

  void apply_one(const Rz& g) {
    const complex lo = std::polar(1.0, -g.angle / 2), hi = std::polar(1.0, g.angle / 2);
    const std::size_t b = std::size_t{1} << g.qubit;
    for (std::size_t s = 0; s < dim(); ++s) amp_(s) *= (s & b) ? hi : lo;
  }

  void apply_one(const Hadamard& g) {
    const double r = 1.0 / std::sqrt(2.0);
    pair_map(g.qubit, r, r, r, -r);
  }

  void apply_one(const RxBasis& g) {
    const double r = 1.0 / std::sqrt(2.0);
    const complex off{0.0, g.forward ? r : -r};
    pair_map(g.qubit, r, off, off, r);
  }

  void apply_one(const GlobalPhase& g) { amp_ *= std::polar(1.0, g.angle); }

  /// [[a, b], [c, d]] on one qubit.
  void pair_map(std::size_t q, complex a, complex b, complex c, complex d) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t s = 0; s < dim(); ++s) {
      if (s & bit) continue;
      const complex x = amp_(s), y = amp_(s | bit);
      amp_(s) = a * x + b * y;
      amp_(s | bit) = c * x + d * y;
    }
  }

  std::size_t width_;
  Vector amp_;
};

}  // namespace fermiq
