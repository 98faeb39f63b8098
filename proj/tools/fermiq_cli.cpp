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

// fermiq: command-line front end.
//
//   fermiq sets N
//   fermiq transform --modes N [--encoding E] [--coeff RE[,IM]] "2^ 0"
//   fermiq hamiltonian [--integrals PATH] [--encoding E] [--out PATH]
//   fermiq count [FILE | --integrals PATH --encoding E] [--order K] [--steps N] [--ordering O]
//   fermiq circuit [FILE | --integrals PATH --encoding E] [--order K] [--steps N] [--ordering O]
//   fermiq sweep [--integrals PATH] [--encoding E]... [--order K]... [--ordering O]...
//                [--steps MAX] [--time T] [--dense-cap Q] [--out PATH]
//
// Exit status: 0 ok, 2 parse error, 3 validation error, 4 precondition error,
// 64 bad command line, 1 anything else.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermiq.hpp"

#ifndef FERMIQ_VERSION
#define FERMIQ_VERSION "dev"
#endif

namespace {

using namespace fermiq;

constexpr int kExitUsage = 64;

struct RunConfig {
  std::string input;
  std::string integrals;
  std::string out;
  std::vector<std::string> encodings;
  std::vector<int> orders;
  std::vector<std::string> orderings;
  std::size_t steps = 1;
  double time = 1.0;
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t modes = 0;
  std::string term;
  std::vector<double> coeff{1.0};
};

EncodingKind encoding_of(const std::string& s) {
  if (auto k = parse_encoding(s)) return *k;
  throw PreconditionError("unknown encoding '" + s + "'");
}

Ordering ordering_of(const std::string& s) {
  if (auto o = parse_ordering(s)) return *o;
  throw PreconditionError("unknown ordering '" + s + "'");
}

IntegralTable integrals(const RunConfig& cfg) {
  return cfg.integrals.empty() ? h2_sto3g() : load_integrals_file(cfg.integrals);
}

/// The Hamiltonian file when one is given, else one built from integrals.
PauliSum hamiltonian(const RunConfig& cfg) {
  if (cfg.input.empty()) return build_hamiltonian(integrals(cfg), encoding_of(cfg.encodings.front()));
  std::ifstream in(cfg.input);
  if (!in) throw ParseError("cannot open '" + cfg.input + "'");
  return read_pauli_sum(in);
}

/// Writes to --out when set, else to stdout.
template <class F>
void emit(const RunConfig& cfg, F&& write) {
  if (cfg.out.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw PreconditionError("cannot write '" + cfg.out + "'");
  write(os);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
  return s;
}

void provenance(const std::string& command, const RunConfig& cfg) {
  std::vector<std::string> orders;
  for (int k : cfg.orders) orders.push_back(std::to_string(k));
  std::cerr << "fermiq " << FERMIQ_VERSION << ": " << command
            << " input=" << (cfg.input.empty() ? "-" : cfg.input)
            << " integrals=" << (cfg.integrals.empty() ? "builtin:h2_sto3g" : cfg.integrals)
            << " encoding=" << join(cfg.encodings) << " order=" << join(orders)
            << " ordering=" << join(cfg.orderings) << " steps=" << cfg.steps
            << " time=" << detail::format_double(cfg.time) << '\n';
}

// Commands ------------------------------------------------------------------

void cmd_sets(const RunConfig& cfg) {
  detail::require(cfg.modes >= 1 && cfg.modes <= kMaxOrbitals, "mode count out of range");
  emit(cfg, [&](std::ostream& os) { os << tabulate_sets(cfg.modes); });
}

/// "2^ 0" is a_2^dagger a_0.
PauliSum transform_term(const RunConfig& cfg) {
  const EncodingKind kind = encoding_of(cfg.encodings.front());
  detail::require(cfg.coeff.size() == 1 || cfg.coeff.size() == 2, "--coeff takes RE[,IM]");
  const complex c{cfg.coeff[0], cfg.coeff.size() == 2 ? cfg.coeff[1] : 0.0};
  PauliSum out = PauliSum::identity(cfg.modes) * c;
  std::istringstream ts(cfg.term);
  for (std::string tok; ts >> tok;) {
    const bool dagger = tok.back() == '^';
    if (dagger) tok.pop_back();
    std::size_t pos = 0;
    std::size_t j = 0;
    try {
      j = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (tok.empty() || pos != tok.size()) throw ParseError("bad mode token '" + tok + "'");
    detail::require(j < cfg.modes, "mode " + tok + " out of range");
    out = out * mode_operator(kind, dagger, j, cfg.modes);
  }
  return out;
}

void cmd_transform(const RunConfig& cfg) {
  detail::require(cfg.modes >= 1 && cfg.modes <= kMaxOrbitals, "mode count out of range");
  const PauliSum s = transform_term(cfg);
  emit(cfg, [&](std::ostream& os) { write_pauli_sum(os, s); });
}

void cmd_hamiltonian(const RunConfig& cfg) {
  const PauliSum h = build_hamiltonian(integrals(cfg), encoding_of(cfg.encodings.front()));
  emit(cfg, [&](std::ostream& os) { write_pauli_sum(os, h); });
}

void count_row(std::ostream& os, const std::string& scope, std::size_t terms, GateCount g) {
  os << scope << '\t' << terms << '\t' << g.sqg << '\t' << g.cnot << '\t' << g.total() << '\n';
}

void cmd_count(const RunConfig& cfg) {
  const PartitionedHamiltonian ph = partition_commuting(hamiltonian(cfg));
  const TrotterPlan plan =
      make_plan(ph, cfg.orders.front(), cfg.steps, ordering_of(cfg.orderings.front()), cfg.time);
  std::size_t step_terms = 0;
  GateCount step;
  for (const Block& b : plan.step) {
    step_terms += b.terms.size();
    for (const auto& p : b.terms) step += term_gate_count(p);
  }
  emit(cfg, [&](std::ostream& os) {
    os << "scope\tterms\tsqg\tcnot\ttotal\n";
    for (std::size_t k = 0; k < ph.parts.size(); ++k)
      count_row(os, "part" + std::to_string(k), ph.parts[k].term_count(),
                sum_gate_count(ph.parts[k]));
    count_row(os, "step", step_terms, step);
    count_row(os, "total", step_terms * plan.steps, plan_gate_count(plan));
  });
}

void cmd_circuit(const RunConfig& cfg) {
  const PartitionedHamiltonian ph = partition_commuting(hamiltonian(cfg));
  const Circuit c = trotter_circuit(ph, cfg.orders.front(), cfg.steps,
                                    ordering_of(cfg.orderings.front()), cfg.time);
  emit(cfg, [&](std::ostream& os) { write_circuit(os, c); });
}

void cmd_sweep(const RunConfig& cfg) {
  detail::require(cfg.steps >= 1, "--steps must be at least 1");
  const IntegralTable table = integrals(cfg);
  const std::set<int> orders(cfg.orders.begin(), cfg.orders.end());
  std::vector<Ordering> orderings;
  for (const auto& o : cfg.orderings) orderings.push_back(ordering_of(o));

  std::ostringstream csv, summary;
  csv << kSweepCsvHeader << '\n';
  for (const auto& name : cfg.encodings) {
    const EncodingKind kind = encoding_of(name);
    const PartitionedHamiltonian ph = partition_commuting(build_hamiltonian(table, kind));
    const auto rs = precision_sweep(ph, orders, 1, cfg.steps, orderings, cfg.time, cfg.dense_cap);
    for (const auto& r : rs) write_sweep_row(csv, to_string(kind), r);
    for (int order : orders)
      for (Ordering o : orderings) {
        if (o == Ordering::interleaved && order == 3) continue;
        const std::size_t n = crossing_steps(rs, order, o);
        summary << "# crossing encoding=" << to_string(kind) << " order=" << order
                << " ordering=" << to_string(o) << " threshold="
                << detail::format_double(kChemicalPrecision);
        if (n == 0) {
          summary << " steps=none\n";
          continue;
        }
        const auto hit = std::find_if(rs.begin(), rs.end(), [&](const SpectralResult& r) {
          return r.order == order && r.ordering == o && r.steps == n;
        });
        summary << " steps=" << n << " gates=" << hit->gates.total() << '\n';
      }
  }
  emit(cfg, [&](std::ostream& os) { os << csv.str() << summary.str(); });
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::parse: return 2;
    case ErrorKind::validation: return 3;
    case ErrorKind::precondition: return 4;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermion-to-qubit encodings, Hamiltonians, circuits and Trotter sweeps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", FERMIQ_VERSION);
  RunConfig cfg;

  auto encoding_opt = [&cfg](CLI::App* sub, bool many) {
    auto* o = sub->add_option("--encoding", cfg.encodings, "jw, parity or bk")
                  ->check(CLI::IsMember({"jw", "parity", "bk", "jordan-wigner", "bravyi-kitaev"}));
    if (!many) o->expected(1);
    return o;
  };
  auto plan_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--order", cfg.orders, "Trotter order")->expected(1)->check(CLI::Range(1, 4));
    sub->add_option("--steps", cfg.steps, "Trotter steps")->check(CLI::PositiveNumber);
    sub->add_option("--ordering", cfg.orderings, "naive or interleaved")
        ->expected(1)
        ->check(CLI::IsMember({"naive", "interleaved"}));
    sub->add_option("--time", cfg.time, "evolution time");
  };

  auto* sets = app.add_subcommand("sets", "Print P, U, F and R for each mode");
  sets->add_option("n", cfg.modes, "mode count")->required();
  sets->add_option("--out", cfg.out, "output path");

  auto* transform = app.add_subcommand("transform", "Encode a product of ladder operators");
  transform->add_option("term", cfg.term, "e.g. \"2^ 0\" for a_2^dagger a_0")->required();
  transform->add_option("--modes", cfg.modes, "mode count")->required();
  transform->add_option("--coeff", cfg.coeff, "coefficient RE[,IM]")->delimiter(',');
  encoding_opt(transform, false);
  transform->add_option("--out", cfg.out, "output path");

  auto* ham = app.add_subcommand("hamiltonian", "Build a qubit Hamiltonian from integrals");
  ham->add_option("--integrals", cfg.integrals, "integral file (default: bundled H2)");
  encoding_opt(ham, false);
  ham->add_option("--out", cfg.out, "output path");

  auto* count = app.add_subcommand("count", "Gate counts for a Trotterized Hamiltonian");
  count->add_option("input", cfg.input, "Pauli-sum file (default: build from integrals)");
  count->add_option("--integrals", cfg.integrals, "integral file (default: bundled H2)");
  encoding_opt(count, false);
  plan_opts(count);
  count->add_option("--out", cfg.out, "output path");

  auto* circuit = app.add_subcommand("circuit", "Emit the Trotter circuit");
  circuit->add_option("input", cfg.input, "Pauli-sum file (default: build from integrals)");
  circuit->add_option("--integrals", cfg.integrals, "integral file (default: bundled H2)");
  encoding_opt(circuit, false);
  plan_opts(circuit);
  circuit->add_option("--out", cfg.out, "output path");

  auto* sweep = app.add_subcommand("sweep", "Phase-estimate error against Trotter steps, as CSV");
  sweep->add_option("--integrals", cfg.integrals, "integral file (default: bundled H2)");
  encoding_opt(sweep, true)->delimiter(',');
  sweep->add_option("--order", cfg.orders, "Trotter orders")
      ->delimiter(',')
      ->check(CLI::Range(1, 4));
  sweep->add_option("--ordering", cfg.orderings, "orderings")
      ->delimiter(',')
      ->check(CLI::IsMember({"naive", "interleaved"}));
  sweep->add_option("--steps", cfg.steps, "largest step count (sweeps 1..N)");
  sweep->add_option("--time", cfg.time, "evolution time");
  sweep->add_option("--dense-cap", cfg.dense_cap, "largest qubit count for dense matrices");
  sweep->add_option("--out", cfg.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  const bool is_sweep = sweep->parsed();
  if (cfg.encodings.empty())
    cfg.encodings = is_sweep ? std::vector<std::string>{"bk", "jw"}
                             : std::vector<std::string>{"bk"};
  if (cfg.orders.empty()) cfg.orders = {1};
  if (cfg.orderings.empty())
    cfg.orderings = is_sweep ? std::vector<std::string>{"naive", "interleaved"}
                             : std::vector<std::string>{"naive"};
  if (is_sweep && !sweep->count("--steps")) cfg.steps = 12;

  try {
    if (sets->parsed()) {
      provenance("sets", cfg);
      cmd_sets(cfg);
    } else if (transform->parsed()) {
      provenance("transform", cfg);
      cmd_transform(cfg);
    } else if (ham->parsed()) {
      provenance("hamiltonian", cfg);
      cmd_hamiltonian(cfg);
    } else if (count->parsed()) {
      provenance("count", cfg);
      cmd_count(cfg);
    } else if (circuit->parsed()) {
      provenance("circuit", cfg);
      cmd_circuit(cfg);
    } else {
      provenance("sweep", cfg);
      cmd_sweep(cfg);
    }
  } catch (const Error& e) {
    std::cerr << "fermiq: " << e.what() << '\n';
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "fermiq: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
