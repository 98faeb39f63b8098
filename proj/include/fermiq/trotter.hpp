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
 * Suzuki-Trotter schedules for a Hamiltonian split into commuting parts.
 *
 * Stages are listed in the order they act on the state. Family 0 is the
 * first part (A), family 1 the second (B). One step of each order:
 *
 *   1: A, B
 *   2: A/2, B, A/2
 *   3: 7/24 A, 2/3 B, 3/4 A, -2/3 B, -1/24 A, B
 *   4: product over i of (p_i/2 A, p_i B, p_i/2 A)
 *
 * with p_1 = p_2 = p_4 = p_5 = 1/(4 - 4^(1/3)) and p_3 = 1 - 4 p_1.
 *
 * The interleaved ordering replaces the two part exponentials by single-term
 * exponentials: each part sorted by descending |c|, then alternated A, B, A,
 * B, ... until one list runs out, then the rest. Order 2 runs that sequence
 * at half scale forward then backward; order 4 composes order-2 steps with
 * the p_i above.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fermiq/circuit.hpp"
#include "fermiq/error.hpp"
#include "fermiq/hamiltonian.hpp"
#include "fermiq/synthesis.hpp"

namespace fermiq {

enum class Ordering { naive, interleaved };

inline std::string_view to_string(Ordering o) {
  return o == Ordering::naive ? "naive" : "interleaved";
}

inline std::optional<Ordering> parse_ordering(std::string_view s) {
  if (s == "naive") return Ordering::naive;
  if (s == "interleaved") return Ordering::interleaved;
  return std::nullopt;
}

struct Stage {
  std::size_t family;
  double scale;
};

struct TrotterSchedule {
  int order = 1;
  std::size_t steps = 1;
  std::vector<Stage> stages;  ///< one step
};

inline double suzuki_p1() { return 1.0 / (4.0 - std::cbrt(4.0)); }
inline double suzuki_p3() { return 1.0 - 4.0 * suzuki_p1(); }

inline std::vector<double> suzuki_fourth_order_constants() {
  const double p1 = suzuki_p1();
  return {p1, p1, suzuki_p3(), p1, p1};
}

namespace detail {

inline void check_order_steps(int order, std::size_t steps) {
  if (order < 1 || order > 4)
    throw PreconditionError("Trotter order " + std::to_string(order) +
                            " not supported (1..4)");
  if (steps == 0) throw PreconditionError("Trotter step count must be positive");
}

}  // namespace detail

inline TrotterSchedule suzuki_schedule(int order, std::size_t steps) {
  detail::check_order_steps(order, steps);
  TrotterSchedule s{order, steps, {}};
  switch (order) {
    case 1: s.stages = {{0, 1.0}, {1, 1.0}}; break;
    case 2: s.stages = {{0, 0.5}, {1, 1.0}, {0, 0.5}}; break;
    case 3:
      s.stages = {{0, 7.0 / 24}, {1, 2.0 / 3}, {0, 3.0 / 4},
                  {1, -2.0 / 3}, {0, -1.0 / 24}, {1, 1.0}};
      break;
    default:
      for (double p : suzuki_fourth_order_constants())
        s.stages.insert(s.stages.end(), {{0, p / 2}, {1, p}, {0, p / 2}});
  }
  return s;
}

/// exp(-i scale dt sum(terms)); the terms commute.
struct Block {
  std::vector<PauliString> terms;
  double scale;
};

/// One Trotter step as a block sequence, repeated `steps` times with
/// dt = t / steps.
struct TrotterPlan {
  std::size_t width = 0;
  std::size_t steps = 1;
  double dt = 1.0;
  std::vector<Block> step;
};

/// Part terms by descending |c|, ties in canonical order.
inline std::vector<PauliString> by_magnitude(const PauliSum& part) {
  std::vector<PauliString> v = part.terms();
  std::stable_sort(v.begin(), v.end(), [](const PauliString& a, const PauliString& b) {
    return std::abs(a.coefficient()) > std::abs(b.coefficient());
  });
  return v;
}

inline std::vector<PauliString> interleaved_sequence(const PartitionedHamiltonian& ph) {
  if (ph.parts.size() != 2)
    throw PreconditionError("interleaved ordering needs exactly two parts, got " +
                            std::to_string(ph.parts.size()));
  const auto a = by_magnitude(ph.parts[0]);
  const auto b = by_magnitude(ph.parts[1]);
  std::vector<PauliString> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    out.push_back(a[i++]);
    out.push_back(b[j++]);
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

inline TrotterPlan make_plan(const PartitionedHamiltonian& ph, int order,
                             std::size_t steps, Ordering ordering, double t = 1.0) {
  detail::check_order_steps(order, steps);
  detail::require(std::isfinite(t), "non-finite evolution time");
  TrotterPlan plan{ph.full.size(), steps, t / static_cast<double>(steps), {}};
  const std::size_t k = ph.parts.size();

  if (ordering == Ordering::interleaved) {
    const std::vector<PauliString> seq = interleaved_sequence(ph);
    auto run = [&plan](const std::vector<PauliString>& terms, double scale) {
      for (const auto& p : terms) plan.step.push_back({{p}, scale});
    };
    std::vector<PauliString> rev(seq.rbegin(), seq.rend());
    switch (order) {
      case 1: run(seq, 1.0); break;
      case 2: run(seq, 0.5), run(rev, 0.5); break;
      case 4:
        for (double p : suzuki_fourth_order_constants()) run(seq, p / 2), run(rev, p / 2);
        break;
      default:
        throw PreconditionError("interleaved ordering supports orders 1, 2 and 4");
    }
    return plan;
  }

  if (k == 0) return plan;
  if (k == 1) {
    plan.step.push_back({ph.parts[0].terms(), 1.0});
    return plan;
  }
  if (order == 1) {
    for (const auto& part : ph.parts) plan.step.push_back({part.terms(), 1.0});
    return plan;
  }
  if (k != 2)
    throw PreconditionError("Trotter orders above 1 need at most two parts, got " +
                            std::to_string(k));
  for (const Stage& s : suzuki_schedule(order, steps).stages)
    plan.step.push_back({ph.parts[s.family].terms(), s.scale});
  return plan;
}

inline Circuit step_circuit(const TrotterPlan& plan) {
  Circuit c(plan.width);
  for (const Block& b : plan.step)
    for (const PauliString& p : b.terms)
      c.append(exponentiate_term(p, b.scale * plan.dt, plan.width));
  return c;
}

inline Circuit trotter_circuit(const TrotterPlan& plan) {
  const Circuit one = step_circuit(plan);
  Circuit c(plan.width);
  for (std::size_t s = 0; s < plan.steps; ++s) c.append(one);
  return c;
}

inline Circuit trotter_circuit(const PartitionedHamiltonian& ph, int order,
                               std::size_t steps, Ordering ordering, double t = 1.0) {
  return trotter_circuit(make_plan(ph, order, steps, ordering, t));
}

/// Counts for the whole plan without building the circuit.
inline GateCount plan_gate_count(const TrotterPlan& plan) {
  GateCount one;
  for (const Block& b : plan.step)
    for (const PauliString& p : b.terms) one += term_gate_count(p);
  return one * plan.steps;
}

/// Counts for exponentiating every term of `s` once.
inline GateCount sum_gate_count(const PauliSum& s) {
  GateCount c;
  for (const auto& [k, p] : s) c += term_gate_count(p);
  return c;
}

}  // namespace fermiq
