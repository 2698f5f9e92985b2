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

#include "uvcc/lowering.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "uvcc/errors.hpp"

namespace uvcc {

namespace {


std::vector<int> role_qubits(const std::vector<QubitPair>& pairs) {
  std::vector<int> qs;
  qs.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    qs.push_back(p.g);
    qs.push_back(p.e);
  }
  return qs;
}

// Both non-exponential methods collapse to the same 2-qubit structure at
// m=1; this realization is exact (global phase included) with 2 CX.
Circuit m1_two_cx(QubitPair p, double theta, int width) {
  Circuit c(width);
  c.append(Gate::h(p.e));
  c.append(Gate::cx(p.e, p.g));
  c.append(Gate::ry(p.g, -theta));
  c.append(Gate::ry(p.e, -theta));
  c.append(Gate::cx(p.e, p.g));
  c.append(Gate::h(p.e));
  return c;
}

std::uint32_t gray(std::uint32_t k) { return k ^ (k >> 1); }

// Gray-code multiplexed RY: applies RY(theta) on the fired polarity pattern
// and identity on every other pattern. The slot-k rotation angle is
// theta/2^n * (-1)^popcount(gray(k) & p*), p* the fired pattern with
// controls[0] as most significant bit.
void emit_multiplex_ry(Circuit& c, const ControlSpec& controls, int target,
                       double theta) {
  const int n = static_cast<int>(controls.size());
  if (n == 0) {
    c.append(Gate::ry(target, theta));
    return;
  }
  std::uint32_t pstar = 0;
  for (int k = 0; k < n; ++k)
    if (controls[k].on_one) pstar |= 1u << (n - 1 - k);
  const std::uint32_t N = 1u << n;
  for (std::uint32_t k = 0; k < N; ++k) {
    const int sign = std::popcount(gray(k) & pstar) % 2 ? -1 : 1;
    c.append(Gate::ry(target, sign * theta / static_cast<double>(N)));
    const std::uint32_t diff = gray(k) ^ gray((k + 1) % N);
    const int j = n - std::bit_width(diff);
    c.append(Gate::cx(controls[j].qubit, target));
  }
}

void emit_cry(Circuit& c, int control, int target, double theta) {
  c.append(Gate::ry(target, theta / 2));
  c.append(Gate::cx(control, target));
  c.append(Gate::ry(target, -theta / 2));
  c.append(Gate::cx(control, target));
}

// AND-chain of `ctrls` into clean ancillas anc_base.., returning the qubit
// holding the conjunction. The chain gates go to `chain` so the caller can
// uncompute with their dagger.
int emit_and_chain(Circuit& chain, const std::vector<int>& ctrls,
                   int anc_base, bool use_rtof) {
  int prev = ctrls[0];
  int anc = anc_base;
  for (size_t i = 1; i < ctrls.size(); ++i) {
    if (use_rtof)
      chain.append(Gate::rtof(prev, ctrls[i], anc));
    else
      chain.append(Gate::tof(prev, ctrls[i], anc));
    prev = anc++;
  }
  return prev;
}

int mcry_ancillas_needed(const Gate& g, MCRotationScheme mcr) {
  if (g.kind == GateKind::MCX)
    return std::max<int>(0, static_cast<int>(g.controls.size()) - 2);
  if (g.kind != GateKind::MCRY ||
      mcr.kind != MCRotationScheme::Kind::AncillaLadder)
    return 0;
  return std::max<int>(0, static_cast<int>(g.controls.size()) - 2);
}

// n-controlled RY via two conjunction reads around two half-angle CRYs.
// The ancilla chain stays computed across the whole construction, so the
// relative phases of the chain Toffolis cancel exactly against the
// uncompute and the gate flipping the rotation target is a plain CX.
void emit_ancilla_mcry(Circuit& c, const ControlSpec& controls, int target,
                       double theta, int anc_base, bool use_rtof) {
  const int n = static_cast<int>(controls.size());
  if (n <= 1) {
    emit_multiplex_ry(c, controls, target, theta);
    return;
  }
  std::vector<Gate> polarity_fix;
  for (const auto& ctl : controls)
    if (!ctl.on_one) polarity_fix.push_back(Gate::x(ctl.qubit));
  for (const auto& g : polarity_fix) c.append(g);

  const Control last = controls.back();
  std::vector<int> chain_ctrls;
  for (int i = 0; i + 1 < n; ++i) chain_ctrls.push_back(controls[i].qubit);

  Circuit chain(c.width, c.ancilla_count);
  const int top = chain_ctrls.size() == 1
                      ? chain_ctrls[0]
                      : emit_and_chain(chain, chain_ctrls, anc_base, use_rtof);
  c.append(chain);
  c.append(Gate::cx(top, target));
  emit_cry(c, last.qubit, target, -theta / 2);
  c.append(Gate::cx(top, target));
  emit_cry(c, last.qubit, target, theta / 2);
  c.append(dagger(chain));

  for (const auto& g : polarity_fix) c.append(g);
}

// Fixed relative-phase Toffoli realization; see header for its phase table.
void emit_rtof(Circuit& c, const Gate& g) {
  const int c1 = g.controls[0].qubit;
  const int c2 = g.controls[1].qubit;
  const int t = g.target;
  std::vector<Gate> seq = {Gate::sdg(t),     Gate::h(t),   Gate::tdg(t),
                           Gate::cx(c2, t),  Gate::t(t),   Gate::cx(c1, t),
                           Gate::tdg(t),     Gate::cx(c2, t), Gate::t(t),
                           Gate::h(t)};
  if (g.dag) {
    std::reverse(seq.begin(), seq.end());
    for (auto& gg : seq) gg = dagger(gg);
  }
  for (const auto& gg : seq) c.append(gg);
}

// Standard 6-CX, 7-T Toffoli.
void emit_tof(Circuit& c, const Gate& g) {
  const int c1 = g.controls[0].qubit;
  const int c2 = g.controls[1].qubit;
  const int t = g.target;
  c.append(Gate::h(t));
  c.append(Gate::cx(c2, t));
  c.append(Gate::tdg(t));
  c.append(Gate::cx(c1, t));
  c.append(Gate::t(t));
  c.append(Gate::cx(c2, t));
  c.append(Gate::tdg(t));
  c.append(Gate::cx(c1, t));
  c.append(Gate::t(c2));
  c.append(Gate::t(t));
  c.append(Gate::h(t));
  c.append(Gate::cx(c1, c2));
  c.append(Gate::t(c1));
  c.append(Gate::tdg(c2));
  c.append(Gate::cx(c1, c2));
}

// C^kX as chain RTOFs plus one full Toffoli onto the target (the full one
// keeps the action exact when the target carries superposition).
void emit_mcx(Circuit& c, const Gate& g, int anc_base, bool use_rtof) {
  std::vector<Gate> polarity_fix;
  for (const auto& ctl : g.controls)
    if (!ctl.on_one) polarity_fix.push_back(Gate::x(ctl.qubit));
  for (const auto& gg : polarity_fix) c.append(gg);

  const int k = static_cast<int>(g.controls.size());
  if (k == 0) {
    c.append(Gate::x(g.target));
  } else if (k == 1) {
    c.append(Gate::cx(g.controls[0].qubit, g.target));
  } else if (k == 2) {
    emit_tof(c, Gate::tof(g.controls[0].qubit, g.controls[1].qubit, g.target));
  } else {
    std::vector<int> chain_ctrls;
    for (int i = 0; i + 1 < k; ++i) chain_ctrls.push_back(g.controls[i].qubit);
    Circuit chain(c.width, c.ancilla_count);
    const int top = emit_and_chain(chain, chain_ctrls, anc_base, use_rtof);
    c.append(chain);
    emit_tof(c, Gate::tof(g.controls[k - 1].qubit, top, g.target));
    c.append(dagger(chain));
  }
  for (const auto& gg : polarity_fix) c.append(gg);
}

void append_expanded(Circuit& out, const Gate& g, MCRotationScheme mcr,
                     int anc_base) {
  switch (g.kind) {
    case GateKind::MCRY:
      if (mcr.kind == MCRotationScheme::Kind::AncillaLadder) {
        Circuit sub(out.width, out.ancilla_count);
        emit_ancilla_mcry(sub, g.controls, g.target, g.angle, anc_base,
                          mcr.use_rtof);
        for (const auto& gg : sub.gates) append_expanded(out, gg, mcr, anc_base);
      } else {
        emit_multiplex_ry(out, g.controls, g.target, g.angle);
      }
      break;
    case GateKind::Tof:
      emit_tof(out, g);
      break;
    case GateKind::RTof:
      emit_rtof(out, g);
      break;
    case GateKind::MCX: {
      Circuit sub(out.width, out.ancilla_count);
      emit_mcx(sub, g, anc_base, mcr.use_rtof);
      for (const auto& gg : sub.gates) append_expanded(out, gg, mcr, anc_base);
      break;
    }
    default:
      out.append(g);
      break;
  }
}

}  // namespace

std::pair<std::string, std::string> oracle_pair(const ExcitationTerm& t,
                                                const ModeSpec& spec) {
  const auto layout = QubitLayout::of(spec);
  const auto pairs = term_qubits(t, spec, layout);
  std::string g(qubit_count(spec), '0');
  std::string e(qubit_count(spec), '0');
  for (const auto& p : pairs) {
    g[p.g] = '1';
    e[p.e] = '1';
  }
  return {g, e};
}

Circuit lower_rtof(int c1, int c2, int target, int width, bool dag) {
  Circuit c(width);
  emit_rtof(c, Gate::rtof(c1, c2, target, dag));
  return c;
}

Circuit build_S_j(QubitPair pair_j, QubitPair q0_pair, int width) {
  Circuit c(width);
  c.append(Gate::cx(pair_j.e, pair_j.g));
  c.append(Gate::rtof(q0_pair.g, pair_j.g, pair_j.e));
  return c;
}

Circuit build_calU(const ExcitationTerm& t, const ModeSpec& spec) {
  const auto layout = QubitLayout::of(spec);
  const auto pairs = term_qubits(t, spec, layout);
  Circuit c(qubit_count(spec));
  c.append(Gate::cx(pairs[0].g, pairs[0].e));
  for (size_t j = 1; j < pairs.size(); ++j)
    c.append(build_S_j(pairs[j], pairs[0], c.width));
  return c;
}

Circuit term_template(const ExcitationTerm& t, const ModeSpec& spec,
                      LoweringMethod method) {
  const auto layout = QubitLayout::of(spec);
  const auto pairs = term_qubits(t, spec, layout);
  const int W = qubit_count(spec);
  const int m = t.order();

  if (method == LoweringMethod::Exponential)
    return lower_term_exponential(t, spec);

  Circuit c(W);
  if (m == 1) {
    c.append(Gate::cx(pairs[0].g, pairs[0].e));
    c.append(Gate::mcry({{pairs[0].e, true}}, pairs[0].g, -2 * t.theta));
    c.append(Gate::cx(pairs[0].g, pairs[0].e));
    return c;
  }

  if (method == LoweringMethod::Redundant) {
    const Circuit calU = build_calU(t, spec);
    ControlSpec controls;
    for (const auto& p : pairs) controls.push_back({p.e, true});
    c.append(calU);
    c.append(Gate::mcry(controls, pairs[0].g, -2 * t.theta));
    c.append(dagger(calU));
    return c;
  }

  // Givens: CX fan-out from q0, rotation controlled on every other qubit
  // (e qubits fire on |1>, the remaining g qubits on |0>).
  const auto roles = role_qubits(pairs);
  Circuit ladder(W);
  for (size_t k = 1; k < roles.size(); ++k)
    ladder.append(Gate::cx(roles[0], roles[k]));
  ControlSpec controls;
  for (size_t k = 1; k < roles.size(); ++k)
    controls.push_back({roles[k], k % 2 == 1});
  c.append(ladder);
  c.append(Gate::mcry(controls, roles[0], -2 * t.theta));
  c.append(dagger(ladder));
  return c;
}

Circuit lower_mcry(const ControlSpec& controls, int target, double theta,
                   MCRotationScheme scheme, int width) {
  Circuit tmp(width);
  tmp.append(controls.empty() ? Gate::ry(target, theta)
                              : Gate::mcry(controls, target, theta));
  return lower_composites(tmp, scheme);
}

Circuit lower_term_redundant(const ExcitationTerm& t, const ModeSpec& spec,
                             MCRotationScheme mcr) {
  const auto pairs = term_qubits(t, spec, QubitLayout::of(spec));
  if (t.order() == 1) return m1_two_cx(pairs[0], t.theta, qubit_count(spec));
  return lower_composites(term_template(t, spec, LoweringMethod::Redundant),
                          mcr);
}

Circuit lower_term_givens(const ExcitationTerm& t, const ModeSpec& spec,
                          MCRotationScheme mcr) {
  const auto pairs = term_qubits(t, spec, QubitLayout::of(spec));
  if (t.order() == 1) return m1_two_cx(pairs[0], t.theta, qubit_count(spec));
  return lower_composites(term_template(t, spec, LoweringMethod::Givens), mcr);
}

Circuit lower_term_exponential(const ExcitationTerm& t, const ModeSpec& spec) {
  const auto layout = QubitLayout::of(spec);
  const auto pairs = term_qubits(t, spec, layout);
  const auto roles = role_qubits(pairs);
  const int m = t.order();
  const int nq = 2 * m;
  Circuit c(qubit_count(spec));

  // theta(|e><g| - |g><e|) expands into the odd-Y-count X/Y strings; the
  // string with Y exactly on mask gets angle 2*theta*Im(i^(b-a))/4^m where
  // a counts Y on e qubits (odd roles) and b counts Y on g qubits.
  for (std::uint32_t mask = 0; mask < (1u << nq); ++mask) {
    const int ys = std::popcount(mask);
    if (ys % 2 == 0) continue;
    int a = 0;
    for (int q = 1; q < nq; q += 2) a += (mask >> q) & 1;
    const int b = ys - a;
    // Im(i^(b-a)) for odd b-a is +1 when (b-a) mod 4 == 1, else -1.
    const int im = ((b - a) % 4 + 4) % 4 == 1 ? 1 : -1;
    const double phi =
        2.0 * t.theta * im / static_cast<double>(1u << (2 * m));

    std::vector<Gate> undo;
    for (int q = 0; q < nq; ++q) {
      if ((mask >> q) & 1) {
        c.append(Gate::sdg(roles[q]));
        c.append(Gate::h(roles[q]));
        undo.push_back(Gate::s(roles[q]));
        undo.push_back(Gate::h(roles[q]));
      } else {
        c.append(Gate::h(roles[q]));
        undo.push_back(Gate::h(roles[q]));
      }
    }
    for (int q = 0; q + 1 < nq; ++q) c.append(Gate::cx(roles[q], roles[q + 1]));
    c.append(Gate::rz(roles[nq - 1], -2 * phi));
    for (int q = nq - 2; q >= 0; --q) c.append(Gate::cx(roles[q], roles[q + 1]));
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) c.append(*it);
  }
  return c;
}

Circuit lower_composites(const Circuit& c, MCRotationScheme mcr) {
  int extra = 0;
  for (const auto& g : c.gates)
    extra = std::max(extra, mcry_ancillas_needed(g, mcr));
  const int anc_base = c.total_qubits();
  Circuit out(c.width, c.ancilla_count + extra);
  for (const auto& g : c.gates) append_expanded(out, g, mcr, anc_base);
  return out;
}

Circuit build_ansatz_composite(const AnsatzSpec& a, LoweringMethod method) {
  a.spec.validate();
  Circuit c(qubit_count(a.spec));
  const std::string ref = encode_unary(a.reference, a.spec);
  for (size_t k = 0; k < ref.size(); ++k)
    if (ref[k] == '1') c.append(Gate::x(static_cast<int>(k)));
  for (const auto& t : a.terms) c.append(term_template(t, a.spec, method));
  return c;
}

Circuit build_ansatz(const AnsatzSpec& a, LoweringMethod method,
                     MCRotationScheme mcr) {
  return lower_composites(build_ansatz_composite(a, method), mcr);
}

// --- control pruning ---------------------------------------------------

namespace {

enum class KState { Zero, One, Unknown };

KState flip(KState s) {
  if (s == KState::Zero) return KState::One;
  if (s == KState::One) return KState::Zero;
  return KState::Unknown;
}

// decided-unsatisfied / decided-satisfied per the ternary lattice
bool control_dead(const Control& c, const std::vector<KState>& k) {
  return (c.on_one && k[c.qubit] == KState::Zero) ||
         (!c.on_one && k[c.qubit] == KState::One);
}

bool control_live(const Control& c, const std::vector<KState>& k) {
  return (c.on_one && k[c.qubit] == KState::One) ||
         (!c.on_one && k[c.qubit] == KState::Zero);
}

// The fixed RTOF realization is TOF * D with, over the (c1,c2,t) basis,
// D = diag(1,-i,1,-i,1,i,-i,1). Whenever a control is decided, the gate
// restricted to the reachable subspace collapses to at most a controlled
// phase or a phased CX; these rewrites reproduce D exactly, so pruning
// keeps the statevector bit-for-bit. Column phases of the fired block:
// |t=0> -> -i|t=1>, |t=1> -> |t=0> (conjugated for the dagger variant).
void prune_rtof(Circuit& out, const Gate& g, std::vector<KState>& k) {
  const int z = g.controls[0].qubit;  // singly-used control of the circuit
  const int gq = g.controls[1].qubit; // doubled control
  const int t = g.target;
  const bool dag = g.dag;
  enum class C { Dead, Live, Unk };
  auto cls = [&](const Control& c) {
    if (control_dead(c, k)) return C::Dead;
    if (control_live(c, k)) return C::Live;
    return C::Unk;
  };
  const C zs = cls(g.controls[0]);
  const C gs = cls(g.controls[1]);

  // S or Sdg on the target; a no-op when the target is known |0>.
  auto phase_t = [&](bool dagger_phase) {
    if (k[t] == KState::Zero) return;
    out.append(dagger_phase ? Gate::sdg(t) : Gate::s(t));
  };

  if (zs == C::Dead) {
    phase_t(!dag);  // diag(1, -i) on t (conjugate when dag)
    return;
  }
  if (zs == C::Live && gs == C::Dead) {
    phase_t(dag);  // diag(1, i)
    return;
  }
  if (zs == C::Live && gs == C::Live) {
    if (!dag) {
      out.append(Gate::x(t));
      out.append(Gate::sdg(t));
    } else {
      out.append(Gate::s(t));
      out.append(Gate::x(t));
    }
    k[t] = flip(k[t]);
    return;
  }
  if (zs == C::Live) {  // gs unknown
    if (!dag) {
      out.append(Gate::s(t));
      out.append(Gate::sdg(gq));
      out.append(Gate::cx(gq, t));
    } else {
      out.append(Gate::cx(gq, t));
      out.append(Gate::s(gq));
      out.append(Gate::sdg(t));
    }
    k[t] = KState::Unknown;
    return;
  }
  if (gs == C::Dead) {  // zs unknown: diagonal Sdg(t) * CZ(z,t) (conj for dag)
    if (k[t] == KState::Zero) return;
    if (k[t] == KState::One) {
      // CZ with t known |1> is a plain Z on z
      phase_t(!dag);
      out.append(dag ? Gate::sdg(z) : Gate::s(z));
      out.append(dag ? Gate::sdg(z) : Gate::s(z));
      return;
    }
    if (!dag) {
      out.append(Gate::sdg(t));
      out.append(Gate::h(t));
      out.append(Gate::cx(z, t));
      out.append(Gate::h(t));
    } else {
      out.append(Gate::h(t));
      out.append(Gate::cx(z, t));
      out.append(Gate::h(t));
      out.append(Gate::s(t));
    }
    return;  // diagonal action: the known target value survives
  }
  if (gs == C::Live) {  // zs unknown
    if (k[t] == KState::Zero) {
      if (!dag) out.append(Gate::sdg(z));
      out.append(Gate::cx(z, t));
    } else if (k[t] == KState::One) {
      out.append(dag ? Gate::s(gq) : Gate::sdg(gq));
      if (!dag) out.append(Gate::s(z));
      out.append(Gate::cx(z, t));
    } else if (!dag) {
      out.append(Gate::sdg(t));
      out.append(Gate::h(t));
      out.append(Gate::cx(z, t));
      out.append(Gate::h(t));
      out.append(Gate::sdg(z));
      out.append(Gate::cx(z, t));
    } else {
      out.append(Gate::cx(z, t));
      out.append(Gate::s(z));
      out.append(Gate::h(t));
      out.append(Gate::cx(z, t));
      out.append(Gate::h(t));
      out.append(Gate::s(t));
    }
    k[t] = KState::Unknown;
    return;
  }
  out.append(g);  // both controls undecided
  k[t] = KState::Unknown;
}

}  // namespace

Circuit prune_known_controls(const Circuit& c, const std::string& initial) {
  const int n = c.total_qubits();
  if (static_cast<int>(initial.size()) != n &&
      static_cast<int>(initial.size()) != c.width)
    throw LengthMismatch("prune_known_controls: initial state length");
  std::vector<KState> k(n, KState::Zero);
  for (size_t i = 0; i < initial.size(); ++i)
    k[i] = initial[i] == '1' ? KState::One : KState::Zero;

  Circuit out(c.width, c.ancilla_count);
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::X:
        k[g.target] = flip(k[g.target]);
        out.append(g);
        break;
      case GateKind::H:
      case GateKind::RY:
        k[g.target] = KState::Unknown;
        out.append(g);
        break;
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::RZ:
        out.append(g);  // diagonal: classical value survives
        break;
      case GateKind::CX:
      case GateKind::Tof:
      case GateKind::MCX:
      case GateKind::MCRY: {
        bool dead = false;
        ControlSpec remaining;
        for (const auto& ctl : g.controls) {
          if (control_dead(ctl, k)) {
            dead = true;
            break;
          }
          if (!control_live(ctl, k)) remaining.push_back(ctl);
        }
        if (dead) break;  // gate can never fire: drop it
        if (g.kind == GateKind::MCRY) {
          if (remaining.empty())
            out.append(Gate::ry(g.target, g.angle));
          else
            out.append(Gate::mcry(remaining, g.target, g.angle));
          k[g.target] = KState::Unknown;
        } else {
          if (remaining.empty()) {
            out.append(Gate::x(g.target));
            k[g.target] = flip(k[g.target]);
          } else if (remaining.size() == 1 && remaining[0].on_one) {
            out.append(Gate::cx(remaining[0].qubit, g.target));
            k[g.target] = KState::Unknown;
          } else if (remaining.size() == 2 && remaining[0].on_one &&
                     remaining[1].on_one) {
            out.append(Gate::tof(remaining[0].qubit, remaining[1].qubit,
                                 g.target));
            k[g.target] = KState::Unknown;
          } else {
            out.append(Gate::mcx(remaining, g.target));
            k[g.target] = KState::Unknown;
          }
        }
        break;
      }
      case GateKind::RTof:
        prune_rtof(out, g, k);
        break;
    }
  }
  return out;
}

}  // namespace uvcc
