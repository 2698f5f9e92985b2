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

#include <numbers>
#include <random>

#include "uvcc/errors.hpp"
#include "uvcc/simulator.hpp"

using namespace uvcc;

namespace {

ModeSpec spec_of(std::initializer_list<int> ds) {
  ModeSpec s;
  int i = 0;
  for (int d : ds) s.modes.push_back({"M" + std::to_string(i++), d});
  return s;
}

// Frozen cross-implementation reference: the S-6 system of the shipped
// config, probabilities computed independently with a dense-matrix oracle.
AnsatzSpec s6_ansatz() {
  AnsatzSpec a;
  a.spec = spec_of({2, 2, 2});
  a.reference = {{0, 0, 0}};
  const double pi = std::numbers::pi;
  auto term = [&](std::initializer_list<int> occ, double th) {
    ExcitationTerm t;
    int m = 0;
    for (int n : occ) {
      if (n != 0) t.entries.push_back({m, 0, n});
      ++m;
    }
    t.theta = th;
    return t;
  };
  a.terms = {term({1, 1, 1}, pi * 7 / 8),  term({1, 0, 1}, pi * 6 / 13),
             term({0, 1, 1}, pi / 12),     term({1, 1, 0}, pi / 12),
             term({0, 0, 1}, pi / 12),     term({0, 1, 0}, pi / 12),
             term({1, 0, 0}, pi / 12)};
  return a;
}

}  // namespace

TEST_CASE("apply_circuit basics") {
  Circuit c(2);
  c.append(Gate::x(0));
  StateVector psi = apply_circuit(c, zero_state(2));
  CHECK(distribution(psi).count("10") == 1);

  const Circuit empty(2);
  StateVector same = apply_circuit(empty, psi);
  CHECK((same - psi).cwiseAbs().maxCoeff() == 0.0);

  Circuit cx(2);
  cx.append(Gate::cx(0, 1));
  psi = apply_circuit(cx, std::move(psi));
  CHECK(distribution(psi).count("11") == 1);

  CHECK_THROWS_AS(apply_circuit(cx, zero_state(3)), WidthMismatch);
}

TEST_CASE("apply_circuit preserves norm on random circuits") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  Circuit c(4);
  for (int i = 0; i < 60; ++i) {
    switch (rng() % 4) {
      case 0: c.append(Gate::h(static_cast<int>(rng() % 4))); break;
      case 1: c.append(Gate::ry(static_cast<int>(rng() % 4), ang(rng))); break;
      case 2: c.append(Gate::t(static_cast<int>(rng() % 4))); break;
      default: {
        int a = static_cast<int>(rng() % 4);
        int b = (a + 1 + static_cast<int>(rng() % 3)) % 4;
        c.append(Gate::cx(a, b));
      }
    }
  }
  const StateVector psi = apply_circuit(c, zero_state(4));
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("oracle_term_unitary implements the two-level rotation") {
  const auto spec = spec_of({2, 2});
  ExcitationTerm t{{{0, 0, 1}, {1, 0, 1}}, 0.0};

  CMatrix U0 = oracle_term_unitary(t, spec, 0.0);
  CHECK((U0 - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);

  const double th = std::numbers::pi / 2;
  CMatrix U = oracle_term_unitary(t, spec, th);
  CHECK((U * U.adjoint() - CMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() <
        1e-14);
  // |g> = 1010 (role bits g0 e0 g1 e1), |e> = 0101
  const std::int64_t gi = 0b1010, ei = 0b0101;
  CHECK(std::abs(U(ei, gi) - 1.0) < 1e-14);   // g -> e at theta = pi/2
  CHECK(std::abs(U(gi, ei) + 1.0) < 1e-14);   // e -> -g
  for (std::int64_t l = 0; l < 16; ++l) {
    if (l == gi || l == ei) continue;
    CHECK(std::abs(U(l, l) - 1.0) < 1e-14);  // everything else fixed
  }
}

TEST_CASE("oracle_ansatz_state: empty and single-term cases") {
  AnsatzSpec a;
  a.spec = spec_of({2, 2});
  a.reference = {{1, 0}};
  CHECK(distribution(oracle_ansatz_state(a)).count("0110") == 1);

  a.reference = {{0, 0}};
  ExcitationTerm t{{{0, 0, 1}}, 0.3};
  a.terms = {t};
  const StateVector psi = oracle_ansatz_state(a);
  const auto d = distribution(psi);
  CHECK(d.at("1010") == doctest::Approx(std::cos(0.3) * std::cos(0.3)));
  CHECK(d.at("0110") == doctest::Approx(std::sin(0.3) * std::sin(0.3)));
}

TEST_CASE("frozen S-6 oracle distribution") {
  const auto probs = distribution(oracle_ansatz_state(s6_ansatz()));
  REQUIRE(probs.size() == 8);
  CHECK(probs.at("011001") == doctest::Approx(0.704054468199).epsilon(1e-9));
  CHECK(probs.at("100110") == doctest::Approx(0.133497250727).epsilon(1e-9));
  CHECK(probs.at("010101") == doctest::Approx(0.050297412893).epsilon(1e-9));
  CHECK(probs.at("101010") == doctest::Approx(0.003598738728).epsilon(1e-9));
}

TEST_CASE("distribution basics") {
  CHECK(distribution(basis_state("10")).at("10") == 1.0);
  Circuit c(1);
  c.append(Gate::h(0));
  auto d = distribution(apply_circuit(c, zero_state(1)));
  CHECK(d.at("0") == doctest::Approx(0.5));
  CHECK(d.at("1") == doctest::Approx(0.5));

  std::mt19937_64 rng(9);
  StateVector psi(8);
  std::normal_distribution<double> n;
  for (int i = 0; i < 8; ++i) psi[i] = std::complex<double>(n(rng), n(rng));
  psi.normalize();
  double total = 0;
  for (auto& [k, v] : distribution(psi)) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("tvd: identities, disjoint supports, arithmetic") {
  Distribution p{{"a", 0.75}, {"b", 0.25}};
  Distribution q{{"a", 0.5}, {"b", 0.5}};
  CHECK(tvd(p, p) == 0.0);
  CHECK(tvd(p, q) == doctest::Approx(0.25));
  Distribution r{{"c", 1.0}};
  CHECK(tvd(p, r) == doctest::Approx(1.0));
}

TEST_CASE("tvd properties on random triples") {
  std::mt19937_64 rng(13);
  auto random_dist = [&] {
    Distribution d;
    double total = 0;
    for (int i = 0; i < 6; ++i) {
      const double v = static_cast<double>(rng() % 1000 + 1);
      d[std::to_string(i)] = v;
      total += v;
    }
    for (auto& [k, v] : d) v /= total;
    return d;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_dist(), q = random_dist(), r = random_dist();
    CHECK(tvd(p, q) == doctest::Approx(tvd(q, p)));
    CHECK(tvd(p, q) >= 0.0);
    CHECK(tvd(p, q) <= 1.0);
    CHECK(tvd(p, r) <= tvd(p, q) + tvd(q, r) + 1e-12);
  }
}

TEST_CASE("sample_shots: determinism and convergence") {
  Distribution point{{"0101", 1.0}};
  CHECK(sample_shots(point, 100, 5) == point);

  Distribution p{{"00", 0.1}, {"01", 0.2}, {"10", 0.3}, {"11", 0.4}};
  const auto a = sample_shots(p, 5000, 77);
  const auto b = sample_shots(p, 5000, 77);
  CHECK(a == b);
  const auto c = sample_shots(p, 100000, 78);
  CHECK(tvd(c, p) < 0.02);
  CHECK_THROWS(sample_shots(p, 0, 1));
}

TEST_CASE("simulate_noisy: p2 = 0 equals seeded exact sampling") {
  Circuit c(3);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  c.append(Gate::cx(1, 2));
  const auto exact = distribution(apply_circuit(c, zero_state(3)));
  const auto a = simulate_noisy(c, {0.0, 0}, 500, 21);
  const auto b = sample_shots(exact, 500, 21);
  CHECK(a == b);
}

TEST_CASE("simulate_noisy: p2 = 1 scrambles a Bell pair") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  const auto noisy = simulate_noisy(c, {1.0, 0}, 4000, 33);
  // the ideal circuit never yields 01 or 10; full depolarizing does
  double off = 0.0;
  for (const auto& [k, v] : noisy)
    if (k == "01" || k == "10") off += v;
  CHECK(off > 0.2);
}

TEST_CASE("noisy results are reproducible for a fixed seed") {
  Circuit c(2);
  c.append(Gate::h(0));
  c.append(Gate::cx(0, 1));
  const auto a = simulate_noisy(c, {0.05, 0}, 300, 9);
  const auto b = simulate_noisy(c, {0.05, 0}, 300, 9);
  CHECK(a == b);
  const auto other = simulate_noisy(c, {0.05, 0}, 300, 10);
  CHECK(a != other);
}
