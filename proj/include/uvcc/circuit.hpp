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
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace uvcc {

// Primitive tier: X..CX. Composite tier adds multi-controlled rotations,
// Toffolis (full and relative-phase) and multi-controlled X.
enum class GateKind {
  X, H, S, Sdg, T, Tdg, RY, RZ, CX,   // primitive
  MCRY, Tof, RTof, MCX                // composite
};

bool is_primitive(GateKind kind);

struct Control {
  int qubit = 0;
  bool on_one = true;  // false: fires when the qubit is |0>

  bool operator==(const Control&) const = default;
};

using ControlSpec = std::vector<Control>;

struct Gate {
  GateKind kind = GateKind::X;
  int target = 0;
  ControlSpec controls;  // CX: one; Tof/RTof: two; MCRY/MCX: any
  double angle = 0.0;    // RY/RZ/MCRY
  bool dag = false;      // RTof only: inverse of the fixed realization

  static Gate x(int q) { return {GateKind::X, q, {}}; }
  static Gate h(int q) { return {GateKind::H, q, {}}; }
  static Gate s(int q) { return {GateKind::S, q, {}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, q, {}}; }
  static Gate t(int q) { return {GateKind::T, q, {}}; }
  static Gate tdg(int q) { return {GateKind::Tdg, q, {}}; }
  static Gate ry(int q, double a) { return {GateKind::RY, q, {}, a}; }
  static Gate rz(int q, double a) { return {GateKind::RZ, q, {}, a}; }
  static Gate cx(int c, int t) { return {GateKind::CX, t, {{c, true}}}; }
  static Gate mcry(ControlSpec cs, int t, double a) {
    return {GateKind::MCRY, t, std::move(cs), a};
  }
  static Gate tof(int c1, int c2, int t) {
    return {GateKind::Tof, t, {{c1, true}, {c2, true}}};
  }
  // c1 is the singly-used control of the realization, c2 the doubled one.
  static Gate rtof(int c1, int c2, int t, bool dagger = false) {
    return {GateKind::RTof, t, {{c1, true}, {c2, true}}, 0.0, dagger};
  }
  static Gate mcx(ControlSpec cs, int t) {
    return {GateKind::MCX, t, std::move(cs)};
  }

  bool operator==(const Gate&) const = default;
};

// Gate sequence over `width` data qubits plus `ancilla_count` scratch qubits
// appended after the data register. Index 0 is applied first.
struct Circuit {
  int width = 0;
  int ancilla_count = 0;
  std::vector<Gate> gates;

  explicit Circuit(int w = 0, int anc = 0) : width(w), ancilla_count(anc) {}

  int total_qubits() const { return width + ancilla_count; }
  void append(Gate g);  // validates qubit indices and control distinctness
  void append(const Circuit& other);
};

enum class Tier { Composite, Primitive };

struct GateCounts {
  std::int64_t cx = 0;
  std::int64_t single_qubit = 0;  // every 1-qubit gate, T family included
  std::int64_t t_like = 0;        // T and Tdg
  std::int64_t mcry = 0;
  std::int64_t tof = 0;
  std::int64_t rtof = 0;
  std::int64_t mcx = 0;

  GateCounts& operator+=(const GateCounts& o);
  friend GateCounts operator+(GateCounts a, const GateCounts& b) {
    a += b;
    return a;
  }
  bool operator==(const GateCounts&) const = default;
};

// a then b; widths must match (ancilla counts may differ, max is kept).
Circuit compose(const Circuit& a, const Circuit& b);

Gate dagger(const Gate& g);
Circuit dagger(const Circuit& c);

// Exact tallies. Primitive tier rejects composite gates (TierViolation).
GateCounts count_gates(const Circuit& c, Tier tier);

// Removes adjacent mutually-inverse primitive pairs on identical qubits and
// merges adjacent RY/RZ on the same qubit (dropped when the sum is a
// multiple of 4*pi within 1e-12). Runs to a fixed point.
Circuit peephole_cancel(const Circuit& c);

// OPENQASM 2.0 subset over {x,h,s,sdg,t,tdg,ry,rz,cx}; primitive tier only.
std::string export_qasm(const Circuit& c);

nlohmann::json counts_to_json(const GateCounts& counts);

}  // namespace uvcc
