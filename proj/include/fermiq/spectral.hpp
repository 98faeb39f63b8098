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
 * Ground-state energies from propagator phases.
 *
 *   <psi_g| U |psi_g> / |<psi_g| U |psi_g>| = exp(-i E t)
 *
 * U is either exp(-iHt) or a Trotter product. Trotter products are evaluated
 * twice: by simulating the synthesized circuit on a state vector, and by
 * multiplying dense block exponentials.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fermiq/config.hpp"
#include "fermiq/dense.hpp"
#include "fermiq/error.hpp"
#include "fermiq/hamiltonian.hpp"
#include "fermiq/state_vector.hpp"
#include "fermiq/trotter.hpp"

namespace fermiq {

struct GroundState {
  double energy;
  StateVector state;
};

inline GroundState ground_state(const PauliSum& h, std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_width(h.size(), cap);
  Eigen::SelfAdjointEigenSolver<Matrix> es(to_matrix(h, cap));
  if (es.info() != Eigen::Success) throw Error(ErrorKind::validation, "eigensolver failed");
  return {es.eigenvalues()(0), StateVector(h.size(), es.eigenvectors().col(0))};
}

/// exp(-i t M) for Hermitian M.
inline Matrix hermitian_expm(const Matrix& m, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  const Vector phases =
      (es.eigenvalues().cast<complex>() * complex{0.0, -t}).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace detail {

inline double phase_energy(complex overlap, double t) {
  if (std::abs(overlap) < 1e-6)
    throw PreconditionError("propagator overlap with the ground state vanishes");
  return -std::arg(overlap) / t;
}

}  // namespace detail

/// E_g from the phase of <psi_g| exp(-iHt) |psi_g>. Requires |E_g t| < pi.
inline double exact_phase_energy(const PauliSum& h, double t = 1.0,
                                 std::size_t cap = kDefaultDenseCap) {
  detail::require(t > 0 && std::isfinite(t), "evolution time must be positive");
  const GroundState g = ground_state(h, cap);
  if (std::abs(g.energy * t) >= std::numbers::pi)
    throw PreconditionError("|E_g t| >= pi; phase would wrap");
  const Matrix u = hermitian_expm(to_matrix(h, cap), t);
  const Vector& psi = g.state.amplitudes();
  return detail::phase_energy(psi.dot(u * psi), t);
}

/// Unitary of one plan step, blocks multiplied in time order.
inline Matrix dense_step_unitary(const TrotterPlan& plan, std::size_t cap = kDefaultDenseCap) {
  detail::check_dense_width(plan.width, cap);
  const std::size_t dim = std::size_t{1} << plan.width;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Block& b : plan.step) {
    const double tau = b.scale * plan.dt;
    if (b.terms.size() == 1) {
      // exp(-i tau c P) = cos(tau c) - i sin(tau c) P
      const PauliString& p = b.terms.front();
      const double a = tau * p.coefficient().real();
      const Matrix pm = to_matrix(p.scaled(1.0 / p.coefficient()), cap);
      u = (std::cos(a) * Matrix::Identity(dim, dim) - complex{0.0, std::sin(a)} * pm) * u;
    } else {
      PauliSum s(plan.width);
      for (const auto& p : b.terms) s.add(p);
      u = hermitian_expm(to_matrix(s, cap), tau) * u;
    }
  }
  return u;
}

inline Matrix dense_plan_unitary(const TrotterPlan& plan, std::size_t cap = kDefaultDenseCap) {
  const Matrix step = dense_step_unitary(plan, cap);
  Matrix u = Matrix::Identity(step.rows(), step.cols());
  for (std::size_t s = 0; s < plan.steps; ++s) u = step * u;
  return u;
}

struct SpectralResult {
  double exact = 0;
  double estimate = 0;        ///< from circuit simulation
  double estimate_dense = 0;  ///< from dense block products
  double error = 0;           ///< |estimate - exact|
  double overlap_magnitude = 0;
  std::size_t steps = 0;
  int order = 1;
  Ordering ordering = Ordering::naive;
  GateCount gates;
};

inline SpectralResult trotter_phase_estimate(const PartitionedHamiltonian& ph,
                                             const GroundState& g, int order,
                                             std::size_t steps, Ordering ordering,
                                             double t = 1.0,
                                             std::size_t cap = kDefaultDenseCap) {
  detail::require(t > 0 && std::isfinite(t), "evolution time must be positive");
  const TrotterPlan plan = make_plan(ph, order, steps, ordering, t);
  SpectralResult r;
  r.exact = g.energy;
  r.steps = steps;
  r.order = order;
  r.ordering = ordering;

  const Circuit c = trotter_circuit(plan);
  r.gates = gate_count(c);
  StateVector evolved = g.state;
  evolved.apply(c);
  const complex overlap = g.state.inner(evolved);
  r.overlap_magnitude = std::abs(overlap);
  r.estimate = detail::phase_energy(overlap, t);

  const Vector& psi = g.state.amplitudes();
  r.estimate_dense = detail::phase_energy(psi.dot(dense_plan_unitary(plan, cap) * psi), t);
  r.error = std::abs(r.estimate - r.exact);
  return r;
}

inline SpectralResult trotter_phase_estimate(const PartitionedHamiltonian& ph, int order,
                                             std::size_t steps, Ordering ordering,
                                             double t = 1.0,
                                             std::size_t cap = kDefaultDenseCap) {
  return trotter_phase_estimate(ph, ground_state(ph.full, cap), order, steps, ordering, t, cap);
}

/// One result per (order, ordering, steps) in that nesting order.
/// Unsupported combinations (interleaved order 3) are skipped.
inline std::vector<SpectralResult> precision_sweep(const PartitionedHamiltonian& ph,
                                                   const std::set<int>& orders,
                                                   std::size_t first_step,
                                                   std::size_t last_step,
                                                   const std::vector<Ordering>& orderings,
                                                   double t = 1.0,
                                                   std::size_t cap = kDefaultDenseCap) {
  detail::require(first_step >= 1, "sweep steps start at 1");
  const GroundState g = ground_state(ph.full, cap);
  std::vector<SpectralResult> out;
  for (int order : orders)
    for (Ordering o : orderings) {
      if (o == Ordering::interleaved && order == 3) continue;
      for (std::size_t n = first_step; n <= last_step; ++n)
        out.push_back(trotter_phase_estimate(ph, g, order, n, o, t, cap));
    }
  return out;
}

/// Smallest step count of a (order, ordering) series with error <= threshold,
/// 0 when never reached.
inline std::size_t crossing_steps(const std::vector<SpectralResult>& rs, int order,
                                  Ordering ordering,
                                  double threshold = kChemicalPrecision) {
  for (const auto& r : rs)
    if (r.order == order && r.ordering == ordering && r.error <= threshold) return r.steps;
  return 0;
}

inline constexpr const char* kSweepCsvHeader =
    "encoding,order,ordering,steps,sqg,cnot,total_gates,estimate,exact,abs_error";

inline void write_sweep_row(std::ostream& os, std::string_view encoding,
                            const SpectralResult& r) {
  os << encoding << ',' << r.order << ',' << to_string(r.ordering) << ',' << r.steps << ','
     << r.gates.sqg << ',' << r.gates.cnot << ',' << r.gates.total() << ','
     << detail::format_double(r.estimate) << ',' << detail::format_double(r.exact) << ','
     << detail::format_double(r.error) << '\n';
}

}  // namespace fermiq
