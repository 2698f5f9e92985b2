// Copyright 2026 The uvcc-circuits developers
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <numbers>
#include <random>

#include "uvcc/commands.hpp"
#include "uvcc/errors.hpp"
#include "uvcc/lowering.hpp"
#include "uvcc/simulator.hpp"

using namespace uvcc;
using cd = std::complex<double>;

namespace {

constexpr cd kMinusI{0.0, -1.0};

ModeSpec spec_of(int m_modes, int d = 2) {
  ModeSpec s;
  for (int i = 0; i < m_modes; ++i)
    s.modes.push_back({"M" + std::to_string(i), d});
  return s;
}

// all modes excited 0 -> 1
ExcitationTerm probe_term(int m, double theta) {
  ExcitationTerm t;
  for (int i = 0; i < m; ++i) t.entries.push_back({i, 0, 1});
  t.theta = theta;
  return t;
}

cd amp(const StateVector& psi, const std::string& bits) {
  std::int64_t idx = 0;
  for (size_t k = 0; k < bits.size(); ++k)
    if (bits[k] == '1') idx |= std::int64_t{1} << (bits.size() - 1 - k);
  return psi[idx];
}

}  // namespace

TEST_CASE("oracle_pair marks from- and to-level qubits") {
  const auto s = spec_of(2);
  auto [g, e] = oracle_pair(probe_term(1, 0.0), s);
  CHECK(g == "1000");
  CHECK(e == "0100");
  auto [g2, e2] = oracle_pair(probe_term(2, 0.0), s);
  CHECK(g2 == "1010");
  CHECK(e2 == "0101");
  for (size_t i = 0; i < g2.size(); ++i)
    if (g2[i] == '1' || e2[i] == '1') CHECK(g2[i] != e2[i]);
}

TEST_CASE("S_j reproduces the six-row transformation table with phases") {
  // register: q0 (z role), q1 unused spacer, pair_j = (g=q2, e=q3)
  const Circuit sj = build_S_j({2, 3}, {0, 1}, 4);
  // rows as (in, out, phase), bits ordered q0 q1 q2 q3 = z . g e
  struct Row {
    std::string in, out;
    cd phase;
  };
  const Row rows[] = {
      {"0000", "0000", 1.0},  {"1000", "1000", 1.0},
      {"0010", "0010", 1.0},  {"1010", "1011", kMinusI},
      {"0001", "0011", kMinusI}, {"1001", "1010", 1.0},
  };
  for (const auto& r : rows) {
    CAPTURE(r.in);
    StateVector psi = basis_state(r.in);
    psi = apply_circuit(sj, std::move(psi));
    CHECK(std::abs(amp(psi, r.out) - r.phase) < 1e-12);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("S_j costs one CX plus one RTOF (4 CX, 4 T primitively)") {
  const Circuit sj = build_S_j({2, 3}, {0, 1}, 4);
  const auto comp = count_gates(sj, Tier::Composite);
  CHECK(comp.cx == 1);
  CHECK(comp.rtof == 1);
  const auto prim = count_gates(
      lower_composites(sj, MCRotationScheme::multiplex()), Tier::Primitive);
  CHECK(prim.cx == 4);
  CHECK(prim.t_like == 4);
}

TEST_CASE("calU maps g and e onto the all-ones patterns with (-i)^(m-1)") {
  for (int m = 1; m <= 4; ++m) {
    CAPTURE(m);
    const auto spec = spec_of(m);
    const auto term = probe_term(m, 0.0);
    const Circuit calU = build_calU(term, spec);

    const auto comp = count_gates(calU, Tier::Composite);
    CHECK(comp.cx == m);  // 1 + one per S_j
    CHECK(comp.rtof == m - 1);
    const auto prim = count_gates(
        lower_composites(calU, MCRotationScheme::multiplex()),
        Tier::Primitive);
    CHECK(prim.cx == 4 * (m - 1) + 1);

    const cd want = std::pow(kMinusI, m - 1);
    auto [gbits, ebits] = oracle_pair(term, spec);

    StateVector psi = apply_circuit(calU, basis_state(gbits),
                                    CompositePolicy::AutoLower);
    std::string target(2 * m, '1');  // every qubit set
    CHECK(std::abs(amp(psi, target) - want) < 1e-12);

    psi = apply_circuit(calU, basis_state(ebits), CompositePolicy::AutoLower);
    std::string etarget(2 * m, '1');
    etarget[0] = '0';  // q0 stays 0 for the e pattern
    CHECK(std::abs(amp(psi, etarget) - want) < 1e-12);
  }
}

TEST_CASE("m=1: the shared two-CX realization is exact") {
  const auto spec = spec_of(1);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ang(-std::numbers::pi,
                                             std::numbers::pi);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = probe_term(1, ang(rng));
    CHECK(term_worst_error(t, spec, LoweringMethod::Redundant,
                           MCRotationScheme::multiplex()) < 1e-12);
    CHECK(term_worst_error(t, spec, LoweringMethod::Givens,
                           MCRotationScheme::multiplex()) < 1e-12);
  }
  const auto c =
      lower_term_redundant(probe_term(1, 0.4), spec, MCRotationScheme::multiplex());
  CHECK(count_gates(c, Tier::Primitive).cx == 2);
}

TEST_CASE("redundant lowering equals the oracle on the physical subspace") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ang(-std::numbers::pi,
                                             std::numbers::pi);
  for (int m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto t = probe_term(m, ang(rng));
      CAPTURE(m);
      CHECK(term_worst_error(t, spec_of(m), LoweringMethod::Redundant,
                             MCRotationScheme::multiplex()) < 1e-9);
      CHECK(term_worst_error(t, spec_of(m), LoweringMethod::Redundant,
                             MCRotationScheme::ancilla(true)) < 1e-9);
    }
  }
}

TEST_CASE("redundant lowering touches levels beyond the excited pair") {
  // a mode with d>2 leaves pair states |00>; those must be fixed points
  ModeSpec spec = spec_of(2, 3);
  ExcitationTerm t{{{0, 0, 1}, {1, 0, 2}}, 0.9};
  CHECK(term_worst_error(t, spec, LoweringMethod::Redundant,
                         MCRotationScheme::multiplex()) < 1e-9);
}

TEST_CASE("givens and exponential lowerings are exact on the full space") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ang(-std::numbers::pi,
                                             std::numbers::pi);
  for (int m = 1; m <= 3; ++m) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto t = probe_term(m, ang(rng));
      CAPTURE(m);
      CHECK(term_worst_error(t, spec_of(m), LoweringMethod::Givens,
                             MCRotationScheme::multiplex()) < 1e-9);
      CHECK(term_worst_error(t, spec_of(m), LoweringMethod::Exponential,
                             MCRotationScheme::multiplex()) < 1e-9);
    }
    CHECK(term_worst_error(probe_term(m, 1.234), spec_of(m),
                           LoweringMethod::Givens,
                           MCRotationScheme::ancilla(true)) < 1e-9);
  }
}

TEST_CASE("theta = 0 acts as the identity on physical states") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(term_worst_error(probe_term(m, 0.0), spec_of(m),
                           LoweringMethod::Redundant,
                           MCRotationScheme::multiplex()) < 1e-12);
  }
}

TEST_CASE("control counts: m for redundant, 2m-1 for givens") {
  for (int m = 2; m <= 4; ++m) {
    const auto spec = spec_of(m);
    const auto t = probe_term(m, 0.3);
    const Circuit red = term_template(t, spec, LoweringMethod::Redundant);
    const Circuit giv = term_template(t, spec, LoweringMethod::Givens);
    auto find_mcry = [](const Circuit& c) {
      for (const auto& g : c.gates)
        if (g.kind == GateKind::MCRY) return g;
      return Gate{};
    };
    CHECK(find_mcry(red).controls.size() == static_cast<size_t>(m));
    for (const auto& ctl : find_mcry(red).controls) CHECK(ctl.on_one);
    CHECK(find_mcry(giv).controls.size() == static_cast<size_t>(2 * m - 1));
  }
}

TEST_CASE("composite-tier counts match the closed forms") {
  for (int m = 2; m <= 4; ++m) {
    const auto spec = spec_of(m);
    const auto t = probe_term(m, 0.3);
    const auto red = count_gates(term_template(t, spec, LoweringMethod::Redundant),
                                 Tier::Composite);
    CHECK(red.cx == 2 * m);  // 2(m-1) S_j CX + 2 boundary CX... checked below
    CHECK(red.rtof == 2 * (m - 1));
    CHECK(red.mcry == 1);
    const auto giv = count_gates(term_template(t, spec, LoweringMethod::Givens),
                                 Tier::Composite);
    CHECK(giv.cx == 2 * (2 * m - 1));
    CHECK(giv.mcry == 1);
  }
}

TEST_CASE("primitive CX counts land on the reference-table tallies") {
  const auto mux = MCRotationScheme::multiplex();
  auto cx_of = [&](LoweringMethod method, int m) {
    const auto spec = spec_of(m);
    const auto t = probe_term(m, 0.3);
    Circuit c;
    if (method == LoweringMethod::Redundant)
      c = lower_term_redundant(t, spec, mux);
    else if (method == LoweringMethod::Givens)
      c = lower_term_givens(t, spec, mux);
    else
      c = lower_term_exponential(t, spec);
    return count_gates(peephole_cancel(c), Tier::Primitive).cx;
  };
  CHECK(cx_of(LoweringMethod::Exponential, 1) == 4);
  CHECK(cx_of(LoweringMethod::Exponential, 2) == 48);
  CHECK(cx_of(LoweringMethod::Exponential, 3) == 320);
  CHECK(cx_of(LoweringMethod::Givens, 2) == 14);    // table 13 + 1
  CHECK(cx_of(LoweringMethod::Givens, 3) == 42);    // table 41 + 1
  CHECK(cx_of(LoweringMethod::Givens, 4) == 142);   // exact
  CHECK(cx_of(LoweringMethod::Redundant, 2) == 14); // table 13 + 1
  CHECK(cx_of(LoweringMethod::Redundant, 3) == 26); // table 25 + 1
  CHECK(cx_of(LoweringMethod::Redundant, 4) == 42); // exact
}

TEST_CASE("redundancy witness: non-physical states are rewritten") {
  for (int m = 2; m <= 3; ++m) {
    const auto spec = spec_of(m);
    const auto t = probe_term(m, 0.7);
    const Circuit low =
        lower_term_redundant(t, spec, MCRotationScheme::multiplex());
    const CMatrix U = circuit_unitary(low);
    const CMatrix O = oracle_term_unitary(t, spec, t.theta);
    double best = 0.0;
    for (std::int64_t col = 0; col < U.cols(); ++col) {
      bool physical = true;
      for (int j = 0; j < m; ++j) {
        const bool g = col & (std::int64_t{1} << (2 * m - 1 - 2 * j));
        const bool e = col & (std::int64_t{1} << (2 * m - 2 - 2 * j));
        if (g && e) physical = false;
      }
      if (physical) continue;
      best = std::max(best, (U.col(col) - O.col(col)).cwiseAbs().maxCoeff());
    }
    CAPTURE(m);
    CHECK(best > 1e-3);
  }
}

TEST_CASE("lower_rtof is a Toffoli up to diagonal phases") {
  const Circuit r = lower_rtof(0, 1, 2, 3);
  const auto n = count_gates(r, Tier::Primitive);
  CHECK(n.cx == 3);
  CHECK(n.t_like == 4);

  const CMatrix U = circuit_unitary(r);
  // classical action: |110> -> |111>, |000> -> |000>, up to phase
  CHECK(std::abs(std::abs(U(7, 6)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(U(0, 0)) - 1.0) < 1e-12);
  // D = TOF^+ U diagonal
  Circuit tofc(3);
  tofc.append(Gate::tof(0, 1, 2));
  const CMatrix D = circuit_unitary(tofc).adjoint() * U;
  for (std::int64_t i = 0; i < 8; ++i)
    for (std::int64_t j = 0; j < 8; ++j)
      if (i != j) CHECK(std::abs(D(i, j)) < 1e-12);
  // every unfired target-0 diagonal entry is exactly 1 (pruning relies on
  // this; index 6 = fired controls carries the -i transition phase)
  for (std::int64_t i : {0, 2, 4}) CHECK(std::abs(D(i, i) - 1.0) < 1e-12);
  CHECK(std::abs(D(6, 6) - std::complex<double>(0, -1)) < 1e-12);

  // the dagger realization inverts it gate-exactly
  const Circuit rd = lower_rtof(0, 1, 2, 3, true);
  const CMatrix I = circuit_unitary(rd) * U;
  CHECK((I - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("lower_mcry multiplex: counts and matrix") {
  // n=1 is the plain 2-CX controlled rotation
  const double th = 1.15;
  Circuit c1 = lower_mcry({{0, true}}, 1, th, MCRotationScheme::multiplex(), 2);
  CHECK(count_gates(c1, Tier::Primitive).cx == 2);
  CMatrix U = circuit_unitary(c1);
  CMatrix want = CMatrix::Identity(4, 4);
  want(2, 2) = std::cos(th / 2);
  want(3, 3) = std::cos(th / 2);
  want(3, 2) = std::sin(th / 2);
  want(2, 3) = -std::sin(th / 2);
  CHECK((U - want).cwiseAbs().maxCoeff() < 1e-12);

  // n=3 costs exactly 2^3 CX
  Circuit c3 = lower_mcry({{0, true}, {1, true}, {2, true}}, 3, th,
                          MCRotationScheme::multiplex(), 4);
  CHECK(count_gates(c3, Tier::Primitive).cx == 8);
  // fired pattern rotates, a non-fired one does not
  StateVector psi = apply_circuit(c3, basis_state("1110"));
  CHECK(std::abs(amp(psi, "1110") - std::cos(th / 2)) < 1e-12);
  CHECK(std::abs(amp(psi, "1111") - std::sin(th / 2)) < 1e-12);
  psi = apply_circuit(c3, basis_state("1010"));
  CHECK(std::abs(amp(psi, "1010") - 1.0) < 1e-12);

  // n=0 degenerates to a plain RY
  Circuit c0 = lower_mcry({}, 0, th, MCRotationScheme::multiplex(), 1);
  REQUIRE(c0.gates.size() == 1);
  CHECK(c0.gates[0].kind == GateKind::RY);
}

TEST_CASE("lower_mcry handles mixed polarities") {
  const double th = 0.77;
  for (auto scheme : {MCRotationScheme::multiplex(),
                      MCRotationScheme::ancilla(true),
                      MCRotationScheme::ancilla(false)}) {
    Circuit c = lower_mcry({{0, true}, {1, false}, {2, true}}, 3, th, scheme, 4);
    Circuit direct(4);
    direct.append(Gate::mcry({{0, true}, {1, false}, {2, true}}, 3, th));
    const int n = c.total_qubits();
    for (std::int64_t in = 0; in < 16; ++in) {
      StateVector psi = StateVector::Zero(std::int64_t{1} << n);
      psi[in << (n - 4)] = 1.0;
      for (const auto& g : c.gates) apply_gate_inplace(psi, g, n);
      StateVector ref = zero_state(4);
      ref.setZero();
      ref[in] = 1.0;
      apply_gate_inplace(ref, direct.gates[0], 4);
      // compare on the ancilla-0 slice
      for (std::int64_t d = 0; d < 16; ++d)
        CHECK(std::abs(psi[d << (n - 4)] - ref[d]) < 1e-12);
    }
  }
}

TEST_CASE("ancilla ladder counts stay at the recorded values") {
  auto cx_of = [](LoweringMethod method, int m, bool use_rtof) {
    const auto spec = spec_of(m);
    const auto t = probe_term(m, 0.3);
    const auto mcr = MCRotationScheme::ancilla(use_rtof);
    Circuit c = method == LoweringMethod::Redundant
                    ? lower_term_redundant(t, spec, mcr)
                    : lower_term_givens(t, spec, mcr);
    return count_gates(c, Tier::Primitive).cx;
  };
  // relative-phase chains: 14m-12 (redundant), 16m-14 (givens)
  CHECK(cx_of(LoweringMethod::Redundant, 2, true) == 16);
  CHECK(cx_of(LoweringMethod::Redundant, 3, true) == 30);
  CHECK(cx_of(LoweringMethod::Redundant, 4, true) == 44);
  CHECK(cx_of(LoweringMethod::Givens, 2, true) == 18);
  CHECK(cx_of(LoweringMethod::Givens, 3, true) == 34);
}

TEST_CASE("prune: decided gates vanish, satisfied controls drop") {
  Circuit c(2);
  c.append(Gate::cx(0, 1));
  CHECK(prune_known_controls(c, "00").gates.empty());

  Circuit c2(2);
  c2.append(Gate::x(0));
  c2.append(Gate::cx(0, 1));
  const Circuit p2 = prune_known_controls(c2, "00");
  REQUIRE(p2.gates.size() == 2);
  CHECK(p2.gates[1].kind == GateKind::X);
  CHECK(p2.gates[1].target == 1);

  // MCRY: known-satisfied control dropped, unknown control kept
  Circuit c3(4);
  c3.append(Gate::x(1));
  c3.append(Gate::h(3));
  c3.append(Gate::mcry({{1, true}, {3, true}}, 0, 0.4));
  const Circuit p3 = prune_known_controls(c3, "0000");
  REQUIRE(p3.gates.size() == 3);
  CHECK(p3.gates[2].kind == GateKind::MCRY);
  REQUIRE(p3.gates[2].controls.size() == 1);
  CHECK(p3.gates[2].controls[0].qubit == 3);
}

TEST_CASE("prune preserves the action on the initial state") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int trial = 0; trial < 25; ++trial) {
    Circuit c(4);
    for (int i = 0; i < 30; ++i) {
      switch (rng() % 6) {
        case 0: c.append(Gate::x(rng() % 4)); break;
        case 1: c.append(Gate::h(rng() % 4)); break;
        case 2: c.append(Gate::ry(rng() % 4, ang(rng))); break;
        case 3: {
          int a = rng() % 4, b = rng() % 4;
          if (a == b) b = (b + 1) % 4;
          c.append(Gate::cx(a, b));
          break;
        }
        case 4: {
          int a = rng() % 4, b = (a + 1) % 4, t = (a + 2) % 4;
          c.append(Gate::tof(a, b, t));
          break;
        }
        default: {
          int a = rng() % 4, b = (a + 1) % 4, t = (a + 2) % 4;
          c.append(Gate::mcry({{a, true}, {b, false}}, t, ang(rng)));
          break;
        }
      }
    }
    const std::string init = "0000";
    const Circuit pruned = prune_known_controls(c, init);
    const StateVector a =
        apply_circuit(c, basis_state(init), CompositePolicy::AutoLower);
    const StateVector b =
        apply_circuit(pruned, basis_state(init), CompositePolicy::AutoLower);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("pruned ansatz keeps fewer CX than the unpruned one") {
  ModeSpec spec = spec_of(3);
  AnsatzSpec a;
  a.spec = spec;
  a.reference = {{0, 0, 0}};
  a.terms = enumerate_reference_excitations(spec, 3);
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ang(0.1, 1.2);
  for (auto& t : a.terms) t.theta = ang(rng);

  const auto mux = MCRotationScheme::multiplex();
  const Circuit comp = build_ansatz_composite(a, LoweringMethod::Redundant);
  const Circuit plain = lower_composites(comp, mux);
  const Circuit pruned =
      lower_composites(prune_known_controls(comp, "000000"), mux);
  CHECK(count_gates(pruned, Tier::Primitive).cx <
        count_gates(plain, Tier::Primitive).cx);

  const StateVector sa = apply_circuit(plain, zero_state(6));
  const StateVector sb = apply_circuit(pruned, zero_state(6));
  CHECK((sa - sb).cwiseAbs().maxCoeff() < 1e-12);
}
