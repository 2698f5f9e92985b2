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

#include "uvcc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "uvcc/errors.hpp"

namespace uvcc {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

std::int64_t bit_mask(int qubit, int num_qubits) {
  return std::int64_t{1} << (num_qubits - 1 - qubit);
}

void apply_2x2(StateVector& psi, int target, int num_qubits, cd m00, cd m01,
               cd m10, cd m11) {
  const std::int64_t bt = bit_mask(target, num_qubits);
  const std::int64_t n = psi.size();
  for (std::int64_t i = 0; i < n; ++i) {
    if (i & bt) continue;
    const std::int64_t j = i | bt;
    const cd a = psi[i], b = psi[j];
    psi[i] = m00 * a + m01 * b;
    psi[j] = m10 * a + m11 * b;
  }
}

void apply_phase(StateVector& psi, int target, int num_qubits, cd phase) {
  const std::int64_t bt = bit_mask(target, num_qubits);
  const std::int64_t n = psi.size();
  for (std::int64_t i = 0; i < n; ++i)
    if (i & bt) psi[i] *= phase;
}

bool controls_fire(std::int64_t i, const ControlSpec& cs, int num_qubits) {
  for (const auto& c : cs) {
    const bool bit = i & bit_mask(c.qubit, num_qubits);
    if (bit != c.on_one) return false;
  }
  return true;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::int64_t sample_index(const StateVector& psi, std::mt19937_64& rng) {
  double u = next_uniform(rng);
  double acc = 0.0;
  const std::int64_t n = psi.size();
  for (std::int64_t i = 0; i < n; ++i) {
    acc += std::norm(psi[i]);
    if (u < acc) return i;
  }
  return n - 1;
}

}  // namespace

namespace {

// dense amplitudes only make sense at desk scale
void check_register_size(int num_qubits) {
  if (num_qubits > 24)
    throw Error("dense simulation is capped at 24 qubits, got " +
                std::to_string(num_qubits));
}

}  // namespace

StateVector zero_state(int num_qubits) {
  check_register_size(num_qubits);
  StateVector psi = StateVector::Zero(std::int64_t{1} << num_qubits);
  psi[0] = 1.0;
  return psi;
}

StateVector basis_state(std::string_view bits) {
  const int n = static_cast<int>(bits.size());
  StateVector psi = StateVector::Zero(std::int64_t{1} << n);
  std::int64_t idx = 0;
  for (int k = 0; k < n; ++k)
    if (bits[k] == '1') idx |= bit_mask(k, n);
  psi[idx] = 1.0;
  return psi;
}

std::string bit_label(std::int64_t index, int num_qubits) {
  std::string s(num_qubits, '0');
  for (int k = 0; k < num_qubits; ++k)
    if (index & bit_mask(k, num_qubits)) s[k] = '1';
  return s;
}

void apply_gate_inplace(StateVector& psi, const Gate& g, int num_qubits) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (g.kind) {
    case GateKind::X:
      apply_2x2(psi, g.target, num_qubits, 0, 1, 1, 0);
      break;
    case GateKind::H:
      apply_2x2(psi, g.target, num_qubits, inv_sqrt2, inv_sqrt2, inv_sqrt2,
                -inv_sqrt2);
      break;
    case GateKind::S:
      apply_phase(psi, g.target, num_qubits, kI);
      break;
    case GateKind::Sdg:
      apply_phase(psi, g.target, num_qubits, -kI);
      break;
    case GateKind::T:
      apply_phase(psi, g.target, num_qubits, std::polar(1.0, std::numbers::pi / 4));
      break;
    case GateKind::Tdg:
      apply_phase(psi, g.target, num_qubits, std::polar(1.0, -std::numbers::pi / 4));
      break;
    case GateKind::RY: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      apply_2x2(psi, g.target, num_qubits, c, -s, s, c);
      break;
    }
    case GateKind::RZ: {
      const cd ph = std::polar(1.0, g.angle / 2);
      const std::int64_t bt = bit_mask(g.target, num_qubits);
      for (std::int64_t i = 0; i < psi.size(); ++i)
        psi[i] *= (i & bt) ? ph : std::conj(ph);
      break;
    }
    case GateKind::CX:
    case GateKind::Tof:
    case GateKind::MCX: {
      const std::int64_t bt = bit_mask(g.target, num_qubits);
      for (std::int64_t i = 0; i < psi.size(); ++i) {
        if ((i & bt) || !controls_fire(i, g.controls, num_qubits)) continue;
        std::swap(psi[i], psi[i | bt]);
      }
      break;
    }
    case GateKind::MCRY: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      const std::int64_t bt = bit_mask(g.target, num_qubits);
      for (std::int64_t i = 0; i < psi.size(); ++i) {
        if ((i & bt) || !controls_fire(i, g.controls, num_qubits)) continue;
        const std::int64_t j = i | bt;
        const cd a = psi[i], b = psi[j];
        psi[i] = c * a - s * b;
        psi[j] = s * a + c * b;
      }
      break;
    }
    case GateKind::RTof:
      throw Error("RTof has no scheme-independent matrix; lower it first");
  }
}

StateVector apply_circuit(const Circuit& c, StateVector psi,
                          CompositePolicy policy, MCRotationScheme mcr) {
  const int n = c.total_qubits();
  check_register_size(n);
  if (psi.size() != (std::int64_t{1} << n))
    throw WidthMismatch("apply_circuit: state has wrong dimension");
  bool has_composite = false;
  for (const auto& g : c.gates)
    if (!is_primitive(g.kind)) has_composite = true;
  if (has_composite) {
    if (policy == CompositePolicy::Reject)
      throw TierViolation("apply_circuit: composite gate present");
    Circuit lowered = lower_composites(c, mcr);
    if (lowered.total_qubits() != n)
      throw WidthMismatch(
          "apply_circuit: lowering requires ancillas; resize the state or "
          "lower explicitly");
    for (const auto& g : lowered.gates) apply_gate_inplace(psi, g, n);
    return psi;
  }
  for (const auto& g : c.gates) apply_gate_inplace(psi, g, n);
  return psi;
}

CMatrix circuit_unitary(const Circuit& c, CompositePolicy policy,
                        MCRotationScheme mcr) {
  Circuit lowered = c;
  for (const auto& g : c.gates)
    if (!is_primitive(g.kind)) {
      if (policy == CompositePolicy::Reject)
        throw TierViolation("circuit_unitary: composite gate present");
      lowered = lower_composites(c, mcr);
      break;
    }
  const int n = lowered.total_qubits();
  const std::int64_t N = std::int64_t{1} << n;
  CMatrix U(N, N);
  StateVector col = StateVector::Zero(N);
  for (std::int64_t j = 0; j < N; ++j) {
    col.setZero();
    col[j] = 1.0;
    for (const auto& g : lowered.gates) apply_gate_inplace(col, g, n);
    U.col(j) = col;
  }
  return U;
}

void apply_local_unitary(StateVector& psi, const std::vector<int>& qubits,
                         const CMatrix& op, int num_qubits) {
  const int k = static_cast<int>(qubits.size());
  const std::int64_t K = std::int64_t{1} << k;
  if (op.rows() != K || op.cols() != K)
    throw WidthMismatch("apply_local_unitary: operator size mismatch");
  std::vector<std::int64_t> bits(k);
  std::int64_t all = 0;
  for (int i = 0; i < k; ++i) {
    bits[i] = bit_mask(qubits[i], num_qubits);
    all |= bits[i];
  }
  Eigen::VectorXcd in(K), out(K);
  for (std::int64_t base = 0; base < psi.size(); ++base) {
    if (base & all) continue;
    for (std::int64_t p = 0; p < K; ++p) {
      std::int64_t idx = base;
      for (int i = 0; i < k; ++i)
        if (p & (std::int64_t{1} << (k - 1 - i))) idx |= bits[i];
      in[p] = psi[idx];
    }
    out.noalias() = op * in;
    for (std::int64_t p = 0; p < K; ++p) {
      std::int64_t idx = base;
      for (int i = 0; i < k; ++i)
        if (p & (std::int64_t{1} << (k - 1 - i))) idx |= bits[i];
      psi[idx] = out[p];
    }
  }
}

CMatrix oracle_term_unitary(const ExcitationTerm& t, const ModeSpec& spec,
                            double theta) {
  const auto pairs = term_qubits(t, spec, QubitLayout::of(spec));
  const int m = static_cast<int>(pairs.size());
  const std::int64_t N = std::int64_t{1} << (2 * m);
  std::int64_t gi = 0, ei = 0;
  for (int j = 0; j < m; ++j) {
    gi |= std::int64_t{1} << (2 * m - 1 - 2 * j);      // role 2j (pair.g)
    ei |= std::int64_t{1} << (2 * m - 1 - (2 * j + 1));  // role 2j+1 (pair.e)
  }
  CMatrix U = CMatrix::Identity(N, N);
  const double c = std::cos(theta), s = std::sin(theta);
  U(gi, gi) = c;
  U(ei, ei) = c;
  U(ei, gi) = s;
  U(gi, ei) = -s;
  return U;
}

StateVector oracle_ansatz_state(const AnsatzSpec& a) {
  a.spec.validate();
  const int W = qubit_count(a.spec);
  const auto layout = QubitLayout::of(a.spec);
  StateVector psi = basis_state(encode_unary(a.reference, a.spec));
  for (const auto& t : a.terms) {
    const auto pairs = term_qubits(t, a.spec, layout);
    std::vector<int> qs;
    for (const auto& p : pairs) {
      qs.push_back(p.g);
      qs.push_back(p.e);
    }
    apply_local_unitary(psi, qs, oracle_term_unitary(t, a.spec, t.theta), W);
  }
  return psi;
}

Distribution distribution(const StateVector& psi) {
  const int n = std::bit_width(static_cast<std::uint64_t>(psi.size())) - 1;
  Distribution d;
  for (std::int64_t i = 0; i < psi.size(); ++i) {
    const double p = std::norm(psi[i]);
    if (p >= 1e-15) d[bit_label(i, n)] = p;
  }
  return d;
}

double tvd(const Distribution& p, const Distribution& q) {
  double acc = 0.0;
  for (const auto& [k, v] : p) {
    auto it = q.find(k);
    acc += std::abs(v - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [k, v] : q)
    if (!p.count(k)) acc += v;
  return acc / 2.0;
}

Distribution sample_shots(const Distribution& p, std::int64_t shots,
                          std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_shots: shots < 1");
  std::mt19937_64 rng(splitmix64(seed));
  std::map<std::string, std::int64_t> counts;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = next_uniform(rng);
    double acc = 0.0;
    const std::string* last = nullptr;
    for (const auto& [k, v] : p) {
      acc += v;
      last = &k;
      if (u < acc) break;
    }
    if (last) ++counts[*last];
  }
  Distribution out;
  for (const auto& [k, v] : counts)
    out[k] = static_cast<double>(v) / static_cast<double>(shots);
  return out;
}

Distribution data_register_distribution(const Circuit& c, double tol) {
  StateVector psi = apply_circuit(c, zero_state(c.total_qubits()));
  if (c.ancilla_count == 0) return distribution(psi);
  const std::int64_t anc_states = std::int64_t{1} << c.ancilla_count;
  double leak = 0.0;
  StateVector data = StateVector::Zero(std::int64_t{1} << c.width);
  for (std::int64_t i = 0; i < psi.size(); ++i) {
    if (i % anc_states == 0)
      data[i / anc_states] = psi[i];
    else
      leak += std::norm(psi[i]);
  }
  if (leak > tol * tol)
    throw Error("ancilla register not restored to |0>, leaked " +
                std::to_string(std::sqrt(leak)));
  return distribution(data);
}

Distribution simulate_noisy(const Circuit& c, const NoiseModel& noise,
                            std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("simulate_noisy: shots < 1");
  if (noise.p2 < 0 || noise.p2 > 1)
    throw std::invalid_argument("simulate_noisy: p2 outside [0,1]");
  if (noise.p2 == 0.0)
    return sample_shots(data_register_distribution(c), shots, seed);

  Circuit lowered = c;
  for (const auto& g : c.gates)
    if (!is_primitive(g.kind)) {
      lowered = lower_composites(c, MCRotationScheme::multiplex());
      break;
    }
  const int n = lowered.total_qubits();
  std::map<std::string, std::int64_t> counts;
  StateVector psi(std::int64_t{1} << n);
  for (std::int64_t traj = 0; traj < shots; ++traj) {
    std::mt19937_64 rng(splitmix64(seed + 0x9e3779b97f4a7c15ull *
                                              static_cast<std::uint64_t>(traj + 1)));
    psi.setZero();
    psi[0] = 1.0;
    for (const auto& g : lowered.gates) {
      apply_gate_inplace(psi, g, n);
      if (g.kind != GateKind::CX) continue;
      if (next_uniform(rng) >= noise.p2) continue;
      // uniformly random non-identity Pauli pair on (control, target)
      const int pauli = 1 + static_cast<int>(rng() % 15);
      const int pa = pauli / 4, pb = pauli % 4;
      const int qs[2] = {g.controls[0].qubit, g.target};
      const int ps[2] = {pa, pb};
      for (int w = 0; w < 2; ++w) {
        switch (ps[w]) {
          case 1:
            apply_2x2(psi, qs[w], n, 0, 1, 1, 0);  // X
            break;
          case 2:
            apply_2x2(psi, qs[w], n, 0, -kI, kI, 0);  // Y
            break;
          case 3:
            apply_phase(psi, qs[w], n, -1.0);  // Z
            break;
          default:
            break;
        }
      }
    }
    const std::int64_t idx = sample_index(psi, rng);
    const std::string full = bit_label(idx, n);
    ++counts[full.substr(0, static_cast<size_t>(c.width))];
  }
  Distribution out;
  for (const auto& [k, v] : counts)
    out[k] = static_cast<double>(v) / static_cast<double>(shots);
  return out;
}

}  // namespace uvcc
