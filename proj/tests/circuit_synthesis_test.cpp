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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace fermiq {
namespace {

constexpr double kTol = 1e-12;
const complex I{0.0, 1.0};

/// Single-qubit gate lifted to `width` qubits by Kronecker products.
Matrix lift(const Matrix& g, std::size_t q, std::size_t width) {
  Matrix m = Matrix::Identity(1, 1);
  for (std::size_t k = width; k-- > 0;) {
    const Matrix f = k == q ? g : Matrix(Matrix::Identity(2, 2));
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = m(r, c) * f;
    m = next;
  }
  return m;
}

Matrix gate_matrix(const Gate& g, std::size_t width) {
  const std::size_t dim = std::size_t{1} << width;
  const double r = 1.0 / std::sqrt(2.0);
  Matrix u(2, 2);
  if (const auto* c = std::get_if<Cnot>(&g)) {
    Matrix m = Matrix::Zero(dim, dim);
    for (std::size_t s = 0; s < dim; ++s) {
      const std::size_t t = (s >> c->control) & 1 ? s ^ (std::size_t{1} << c->target) : s;
      m(t, s) = 1.0;
    }
    return m;
  }
  if (const auto* z = std::get_if<Rz>(&g)) {
    u << std::exp(-I * z->angle / 2.0), 0, 0, std::exp(I * z->angle / 2.0);
    return lift(u, z->qubit, width);
  }
  if (const auto* h = std::get_if<Hadamard>(&g)) {
    u << r, r, r, -r;
    return lift(u, h->qubit, width);
  }
  if (const auto* x = std::get_if<RxBasis>(&g)) {
    const complex off = x->forward ? I * r : -I * r;
    u << r, off, off, r;
    return lift(u, x->qubit, width);
  }
  const auto& p = std::get<GlobalPhase>(g);
  return std::exp(I * p.angle) * Matrix(Matrix::Identity(dim, dim));
}

Matrix circuit_matrix(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.width();
  Matrix m = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates()) m = gate_matrix(g, c.width()) * m;
  return m;
}

/// exp(-i theta c P) = cos(theta c) - i sin(theta c) P for a Pauli string P.
Matrix term_exponential(const PauliString& p, double theta) {
  const double a = theta * p.coefficient().real();
  PauliString unit = p;
  unit.set_coefficient(1.0);
  const std::size_t dim = std::size_t{1} << p.size();
  return std::cos(a) * Matrix(Matrix::Identity(dim, dim)) -
         I * std::sin(a) * oracle::kron_matrix(unit);
}

template <class T>
std::size_t count_of(const Circuit& c) {
  std::size_t n = 0;
  for (const Gate& g : c.gates()) n += std::holds_alternative<T>(g);
  return n;
}

PartitionedHamiltonian hydrogen(EncodingKind kind) {
  return partition_commuting(build_hamiltonian(h2_sto3g(), kind));
}

// Single terms -----------------------------------------------------------------

TEST(Exponentiate, FourFoldZ) {
  const Circuit c = exponentiate_term(PauliString::from_pattern("ZZZZ", 0.3), 0.5, 4);
  EXPECT_EQ(gate_count(c), (GateCount{1, 6}));
  ASSERT_EQ(c.size(), 7u);
  const auto& rz = std::get<Rz>(c.gates()[3]);
  EXPECT_EQ(rz.qubit, 0u);
  EXPECT_DOUBLE_EQ(rz.angle, 2 * 0.5 * 0.3);
  const auto& first = std::get<Cnot>(c.gates()[0]);
  EXPECT_EQ(first.control, 3u);
  EXPECT_EQ(first.target, 2u);
}

TEST(Exponentiate, MixedXY) {
  const Circuit c = exponentiate_term(PauliString::from_pattern("YXXY", 1.0), 0.2, 4);
  EXPECT_EQ(gate_count(c), (GateCount{9, 6}));
  EXPECT_EQ(count_of<Hadamard>(c), 4u);
  EXPECT_EQ(count_of<RxBasis>(c), 4u);
  // two Y factors: the sign flips twice
  const auto rz = std::find_if(c.gates().begin(), c.gates().end(),
                               [](const Gate& g) { return std::holds_alternative<Rz>(g); });
  EXPECT_DOUBLE_EQ(std::get<Rz>(*rz).angle, 0.4);
}

TEST(Exponentiate, IdentityIsGlobalPhase) {
  const Circuit c = exponentiate_term(PauliString(3, -0.8), 0.5, 3);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_DOUBLE_EQ(std::get<GlobalPhase>(c.gates()[0]).angle, 0.4);
  EXPECT_EQ(gate_count(c).total(), 0u);
}

TEST(Exponentiate, SingleQubitUsesNoCnot) {
  const Circuit c = exponentiate_term(PauliString::from_pattern("IYI", 1.0), 0.1, 3);
  EXPECT_EQ(gate_count(c), (GateCount{3, 0}));
}

TEST(Exponentiate, MatchesClosedFormForRandomTerms) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 5;
    PauliString p = oracle::random_string(rng, n);
    p.set_coefficient(u(rng));
    const double theta = u(rng);
    const Circuit c = exponentiate_term(p, theta, n);
    EXPECT_LT(oracle::max_abs(circuit_matrix(c) - term_exponential(p, theta)), 1e-12)
        << p.pattern();
    EXPECT_EQ(gate_count(c), term_gate_count(p)) << p.pattern();
  }
}

TEST(Exponentiate, CountLaw) {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliString p = oracle::random_string(rng, 8);
    const std::size_t w = p.weight();
    std::size_t m = 0;
    for (std::size_t q : p.support()) m += p.label(q) != 'Z';
    const GateCount g = term_gate_count(p);
    if (w == 0) {
      EXPECT_EQ(g.total(), 0u);
      continue;
    }
    EXPECT_EQ(g.cnot, 2 * (w - 1));
    EXPECT_EQ(g.sqg, 1 + 2 * m);
  }
}

TEST(Exponentiate, Preconditions) {
  EXPECT_THROW(exponentiate_term(PauliString::from_pattern("ZZ", I), 1.0, 2), PreconditionError);
  EXPECT_THROW(exponentiate_term(PauliString::from_pattern("ZZ"), 1.0, 3), PreconditionError);
  EXPECT_THROW(exponentiate_term(PauliString::from_pattern("ZZ"), NAN, 2), PreconditionError);
}

// Hamiltonian gate counts ---------------------------------------------------------------

TEST(GateCounts, HydrogenParts) {
  const auto bk = hydrogen(EncodingKind::bravyi_kitaev);
  EXPECT_EQ(sum_gate_count(bk.parts[0]), (GateCount{10, 24}));
  EXPECT_EQ(sum_gate_count(bk.parts[1]), (GateCount{20, 20}));
  EXPECT_EQ(sum_gate_count(bk.full).total(), 74u);
  const auto jw = hydrogen(EncodingKind::jordan_wigner);
  EXPECT_EQ(sum_gate_count(jw.parts[0]), (GateCount{10, 12}));
  EXPECT_EQ(sum_gate_count(jw.parts[1]), (GateCount{36, 24}));
  EXPECT_EQ(sum_gate_count(jw.full).total(), 82u);
}

TEST(GateCounts, PlanScalesWithSteps) {
  const auto bk = hydrogen(EncodingKind::bravyi_kitaev);
  const TrotterPlan plan = make_plan(bk, 1, 3, Ordering::interleaved);
  EXPECT_EQ(plan_gate_count(plan).total(), 222u);
  EXPECT_EQ(gate_count(trotter_circuit(plan)), plan_gate_count(plan));
  const auto jw = hydrogen(EncodingKind::jordan_wigner);
  EXPECT_EQ(plan_gate_count(make_plan(jw, 1, 4, Ordering::interleaved)).total(), 328u);
}

// Schedules -----------------------------------------------------------------

TEST(Schedule, SuzukiConstants) {
  const double p1 = suzuki_p1();
  EXPECT_NEAR(p1, 0.41449077179437573, 1e-15);
  EXPECT_NEAR(4 * p1 + suzuki_p3(), 1.0, 1e-15);
  EXPECT_NEAR(4 * std::pow(p1, 3) + std::pow(suzuki_p3(), 3), 0.0, 1e-15);
  const auto ps = suzuki_fourth_order_constants();
  ASSERT_EQ(ps.size(), 5u);
  EXPECT_EQ(ps[2], suzuki_p3());
}

TEST(Schedule, StageWeightsSumToOne) {
  for (int order = 1; order <= 4; ++order) {
    const TrotterSchedule s = suzuki_schedule(order, 2);
    double a = 0, b = 0;
    for (const Stage& st : s.stages) (st.family ? b : a) += st.scale;
    EXPECT_NEAR(a, 1.0, 1e-14) << order;
    EXPECT_NEAR(b, 1.0, 1e-14) << order;
  }
  EXPECT_EQ(suzuki_schedule(2, 1).stages.size(), 3u);
  EXPECT_EQ(suzuki_schedule(4, 1).stages.size(), 15u);
  EXPECT_THROW(suzuki_schedule(5, 1), PreconditionError);
  EXPECT_THROW(suzuki_schedule(1, 0), PreconditionError);
}

TEST(Plan, InterleavedSequence) {
  const auto bk = hydrogen(EncodingKind::bravyi_kitaev);
  const auto seq = interleaved_sequence(bk);
  ASSERT_EQ(seq.size(), 15u);
  EXPECT_TRUE(seq[0].is_identity());
  EXPECT_EQ(seq[1].pattern(), "IXZX");
  EXPECT_EQ(seq[2].pattern(), "IZII");
  EXPECT_EQ(seq[3].pattern(), "IYZY");
  EXPECT_EQ(seq[4].pattern(), "ZZZI");
  for (std::size_t k = 9; k < seq.size(); ++k) EXPECT_EQ(seq[k].pattern().find_first_of("XY"),
                                                         std::string::npos);
}

TEST(Plan, Shapes) {
  const auto bk = hydrogen(EncodingKind::bravyi_kitaev);
  EXPECT_EQ(make_plan(bk, 1, 2, Ordering::naive).step.size(), 2u);
  EXPECT_EQ(make_plan(bk, 2, 2, Ordering::naive).step.size(), 3u);
  EXPECT_EQ(make_plan(bk, 2, 2, Ordering::interleaved).step.size(), 30u);
  EXPECT_EQ(make_plan(bk, 4, 1, Ordering::interleaved).step.size(), 150u);
  EXPECT_DOUBLE_EQ(make_plan(bk, 1, 4, Ordering::naive, 2.0).dt, 0.5);
  EXPECT_THROW(make_plan(bk, 3, 1, Ordering::interleaved), PreconditionError);
  EXPECT_THROW(make_plan(bk, 1, 0, Ordering::naive), PreconditionError);

  PartitionedHamiltonian three = bk;
  three.parts.push_back(PauliSum(4));
  EXPECT_NO_THROW(make_plan(three, 1, 1, Ordering::naive));
  EXPECT_THROW(make_plan(three, 2, 1, Ordering::naive), PreconditionError);
  EXPECT_THROW(make_plan(three, 1, 1, Ordering::interleaved), PreconditionError);

  const auto single = partition_commuting(PauliSum(PauliString::from_pattern("ZZ", 0.5)));
  EXPECT_EQ(make_plan(single, 4, 3, Ordering::naive).step.size(), 1u);
}

TEST(Plan, CircuitEqualsGateOracle) {
  const auto bk = hydrogen(EncodingKind::bravyi_kitaev);
  for (int order : {1, 2, 4})
    for (std::size_t steps : {1u, 2u})
      for (Ordering o : {Ordering::naive, Ordering::interleaved}) {
        const TrotterPlan plan = make_plan(bk, order, steps, o);
        Matrix expect = Matrix::Identity(16, 16);
        for (std::size_t s = 0; s < steps; ++s)
          for (const Block& b : plan.step)
            for (const PauliString& p : b.terms) expect = term_exponential(p, b.scale * plan.dt) * expect;
        EXPECT_LT(oracle::max_abs(circuit_matrix(trotter_circuit(plan)) - expect), 1e-11);
      }
}

// Circuit container and text form -----------------------------------------------

TEST(CircuitTest, PushValidates) {
  Circuit c(2);
  EXPECT_THROW(c.push(Cnot{0, 0}), PreconditionError);
  EXPECT_THROW(c.push(Cnot{0, 2}), PreconditionError);
  EXPECT_THROW(c.push(Hadamard{2}), PreconditionError);
  EXPECT_THROW(c.push(Rz{0, INFINITY}), PreconditionError);
  EXPECT_THROW(c.append(Circuit(3)), PreconditionError);
  EXPECT_EQ(gate_count(Circuit(2)).total(), 0u);
}

TEST(CircuitTest, TextRoundTrip) {
  const Circuit c = trotter_circuit(hydrogen(EncodingKind::bravyi_kitaev), 2, 2, Ordering::naive);
  std::stringstream buf;
  write_circuit(buf, c);
  const Circuit back = read_circuit(buf);
  EXPECT_EQ(back.width(), 4u);
  ASSERT_EQ(back.size(), c.size());
  std::stringstream again;
  write_circuit(again, back);
  EXPECT_EQ(again.str(), buf.str());
  EXPECT_LT(oracle::max_abs(circuit_matrix(back) - circuit_matrix(c)), 1e-15);
}

TEST(CircuitTest, TextFormat) {
  Circuit c(2);
  c.push(Hadamard{1}).push(Cnot{1, 0}).push(Rz{0, 0.25}).push(RxBasis{1, false}).push(
      GlobalPhase{-1.5});
  std::ostringstream os;
  write_circuit(os, c);
  EXPECT_EQ(os.str(), "width 2\nH 1\nCNOT 1 0\nRZ 0 0.25\nRXI 1\nGPHASE -1.5\n");
}

TEST(CircuitTest, ParseErrors) {
  auto line_of = [](const char* text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_circuit(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("H 0\n"), 1u);
  EXPECT_EQ(line_of("width 2\nCNOT 0 0\n"), 2u);
  EXPECT_EQ(line_of("width 2\n\nFOO 1\n"), 3u);
  EXPECT_EQ(line_of("width 2\nRZ 0 x\n"), 2u);
  EXPECT_EQ(line_of("width 2\nH 0 1\n"), 2u);
  std::istringstream empty("");
  EXPECT_THROW(read_circuit(empty), ParseError);
}

// State vector ------------------------------------------------------------------

TEST(StateVectorTest, MatchesGateMatrices) {
  std::mt19937 rng(33);
  const auto bk = hydrogen(EncodingKind::bravyi_kitaev);
  const Circuit c = trotter_circuit(bk, 1, 1, Ordering::naive);
  const Matrix u = circuit_matrix(c);
  for (std::size_t s = 0; s < 16; ++s) {
    Vector e = Vector::Zero(16);
    e(s) = 1.0;
    StateVector v(4, e);
    v.apply(c);
    EXPECT_LT((v.amplitudes() - u.col(s)).cwiseAbs().maxCoeff(), kTol);
    EXPECT_NEAR(v.norm(), 1.0, kTol);
  }
  EXPECT_THROW(StateVector(3).apply(c), PreconditionError);
  EXPECT_THROW(StateVector(3, Vector::Zero(4)), PreconditionError);
}

}  // namespace
}  // namespace fermiq
