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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "uvcc/ansatz.hpp"
#include "uvcc/circuit.hpp"

namespace uvcc {

enum class LoweringMethod { Exponential, Givens, Redundant };

struct MCRotationScheme {
  enum class Kind { MultiplexExponential, AncillaLadder };
  Kind kind = Kind::MultiplexExponential;
  bool use_rtof = true;  // AncillaLadder: relative-phase vs full Toffoli chain

  static MCRotationScheme multiplex() { return {}; }
  static MCRotationScheme ancilla(bool use_rtof = true) {
    return {Kind::AncillaLadder, use_rtof};
  }
};

// Full-register bitstrings with the from-level qubit of each entry set (g)
// and the to-level qubit set (e); all other positions '0'.
std::pair<std::string, std::string> oracle_pair(const ExcitationTerm& t,
                                                const ModeSpec& spec);

// Relative-phase Toffoli: 3 CX, 4 T-family gates, Cliffords. Equal to the
// full Toffoli times a diagonal phase matrix D with, over basis (c1,c2,t),
// D = diag(1,-i,1,-i,1,i,-i,1). Every t=0 entry of D is 1, which is what
// makes deleting an inert RTof sound in the pruning pass. c2 is the doubled
// control of the realization; the gate is not symmetric under c1<->c2.
Circuit lower_rtof(int c1, int c2, int target, int width, bool dag = false);

// The 3-qubit pair-merge step: CX(e_j -> g_j) then RTof({q0, g_j} -> e_j),
// as composite-tier gates. Reproduces the transformation table:
//   |00>_j|x>_0 fixed, |01>_j|0>_0 fixed, |01>_j|1>_0 -> -i|11>_j|1>_0,
//   |10>_j|0>_0 -> -i|11>_j|0>_0, |10>_j|1>_0 -> |01>_j|1>_0
// with |ab>_j = |e_j g_j>.
Circuit build_S_j(QubitPair pair_j, QubitPair q0_pair, int width);

// CX(q0 -> q1) followed by S_1..S_{m-1}; maps the two excitation patterns to
// states differing only on q0, with amplitude (-i)^(m-1).
Circuit build_calU(const ExcitationTerm& t, const ModeSpec& spec);

// n-controlled RY(theta), exact on all basis states.
//  MultiplexExponential: Gray-code CX/RY sequence, 2^n CX + 2^n RY.
//  AncillaLadder: AND-chain of the first n-1 controls into clean ancillas
//  (kept alive across the construction), then
//  CX(top,t) CRY(-theta/2)(c_n,t) CX(top,t) CRY(theta/2)(c_n,t), uncompute.
Circuit lower_mcry(const ControlSpec& controls, int target, double theta,
                   MCRotationScheme scheme, int width);

// Composite-tier template of one m-excitation unitary under the given
// method (m=1 shares one structure in both non-exponential methods).
Circuit term_template(const ExcitationTerm& t, const ModeSpec& spec,
                      LoweringMethod method);

// Fully lowered m-excitation unitaries over qubit_count(spec) data qubits
// (plus any ancillas the scheme needs).
Circuit lower_term_redundant(const ExcitationTerm& t, const ModeSpec& spec,
                             MCRotationScheme mcr);
Circuit lower_term_givens(const ExcitationTerm& t, const ModeSpec& spec,
                          MCRotationScheme mcr);
Circuit lower_term_exponential(const ExcitationTerm& t, const ModeSpec& spec);

// Expands every composite gate to primitives; allocates ancillas as needed.
Circuit lower_composites(const Circuit& c, MCRotationScheme mcr);

// Forward-propagates known qubit values {0,1,unknown} from `initial` and
// deletes or simplifies controlled gates that are decided. Sound on the
// single input |initial> (relative-phase Toffolis are removed only when a
// control is decided unsatisfied and the target is known |0>; their
// controls are never rewritten).
Circuit prune_known_controls(const Circuit& c, const std::string& initial);

// Reference-state X gates followed by the terms' composite templates.
Circuit build_ansatz_composite(const AnsatzSpec& a, LoweringMethod method);

// Fully lowered state-preparation circuit (no pruning).
Circuit build_ansatz(const AnsatzSpec& a, LoweringMethod method,
                     MCRotationScheme mcr);

}  // namespace uvcc
