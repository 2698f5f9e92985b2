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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "uvcc/ansatz.hpp"
#include "uvcc/circuit.hpp"
#include "uvcc/lowering.hpp"

namespace uvcc {

// Dense amplitudes over 2^width basis states; qubit 0 is the most
// significant bit of the basis index (bitstrings read qubit 0 leftmost).
using StateVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

using Distribution = std::map<std::string, double>;

struct NoiseModel {
  double p2 = 0.0;  // depolarizing probability per two-qubit primitive gate
  std::uint64_t seed = 0;
};

StateVector zero_state(int num_qubits);
StateVector basis_state(std::string_view bits);
std::string bit_label(std::int64_t index, int num_qubits);

enum class CompositePolicy { Reject, AutoLower };

// Applies one gate in place. MCRY/Tof/MCX act through their exact matrices;
// RTof has no scheme-independent matrix and must be lowered first.
void apply_gate_inplace(StateVector& psi, const Gate& g, int num_qubits);

StateVector apply_circuit(const Circuit& c, StateVector psi,
                          CompositePolicy policy = CompositePolicy::AutoLower,
                          MCRotationScheme mcr = MCRotationScheme::multiplex());

// Full unitary of a circuit (use only for small registers).
CMatrix circuit_unitary(const Circuit& c,
                        CompositePolicy policy = CompositePolicy::AutoLower,
                        MCRotationScheme mcr = MCRotationScheme::multiplex());

// Applies a dense operator on the listed qubits (qubits[0] = local MSB).
void apply_local_unitary(StateVector& psi, const std::vector<int>& qubits,
                         const CMatrix& op, int num_qubits);

// I + (cos t - 1)(|g><g| + |e><e|) + sin t (|e><g| - |g><e|) on the term's
// 2m qubits in role order (pair0.g, pair0.e, pair1.g, ...).
CMatrix oracle_term_unitary(const ExcitationTerm& t, const ModeSpec& spec,
                            double theta);

// Ground truth for every lowering: the term rotations applied as dense
// matrices to the encoded reference, in ansatz order.
StateVector oracle_ansatz_state(const AnsatzSpec& a);

// |amplitude|^2 by bitstring; entries below 1e-15 omitted.
Distribution distribution(const StateVector& psi);

// Half the L1 distance over the union of supports.
double tvd(const Distribution& p, const Distribution& q);

// Empirical frequencies of `shots` seeded draws.
Distribution sample_shots(const Distribution& p, std::int64_t shots,
                          std::uint64_t seed);

// Trajectory sampling: after every CX, with probability p2 a uniformly
// random non-identity two-qubit Pauli hits its qubits; one measurement per
// trajectory. Reports the data-register marginal. p2 = 0 falls back to
// sample_shots over the exact distribution (bit-identical results).
Distribution simulate_noisy(const Circuit& c, const NoiseModel& noise,
                            std::int64_t shots, std::uint64_t seed);

// Noiseless distribution of the data register; verifies ancillas end in
// |0> (throws Error when more than `tol` amplitude leaks).
Distribution data_register_distribution(const Circuit& c,
                                        double tol = 1e-9);

}  // namespace uvcc
