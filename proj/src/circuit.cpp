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

#include "uvcc/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

#include "uvcc/errors.hpp"

namespace uvcc {

bool is_primitive(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CX:
      return true;
    default:
      return false;
  }
}

void Circuit::append(Gate g) {
  const int n = total_qubits();
  auto check = [&](int q) {
    if (q < 0 || q >= n)
      throw WidthMismatch("gate touches qubit " + std::to_string(q) +
                          " outside register of " + std::to_string(n));
  };
  check(g.target);
  std::set<int> seen{g.target};
  for (const auto& c : g.controls) {
    check(c.qubit);
    if (!seen.insert(c.qubit).second)
      throw InvalidTerm("gate has duplicate qubit " + std::to_string(c.qubit));
  }
  if (!std::isfinite(g.angle))
    throw std::invalid_argument("gate angle is not finite");
  gates.push_back(std::move(g));
}

void Circuit::append(const Circuit& other) {
  if (other.width != width)
    throw WidthMismatch("append: width " + std::to_string(other.width) +
                        " != " + std::to_string(width));
  if (other.ancilla_count > ancilla_count) ancilla_count = other.ancilla_count;
  for (const auto& g : other.gates) append(g);
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width != b.width) throw WidthMismatch("compose: width mismatch");
  Circuit out(a.width, std::max(a.ancilla_count, b.ancilla_count));
  out.gates = a.gates;
  out.gates.insert(out.gates.end(), b.gates.begin(), b.gates.end());
  return out;
}

Gate dagger(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::S:
      out.kind = GateKind::Sdg;
      break;
    case GateKind::Sdg:
      out.kind = GateKind::S;
      break;
    case GateKind::T:
      out.kind = GateKind::Tdg;
      break;
    case GateKind::Tdg:
      out.kind = GateKind::T;
      break;
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::MCRY:
      out.angle = -g.angle;
      break;
    case GateKind::RTof:
      out.dag = !g.dag;
      break;
    default:
      break;  // X, H, CX, Tof, MCX are self-inverse
  }
  return out;
}

Circuit dagger(const Circuit& c) {
  Circuit out(c.width, c.ancilla_count);
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
    out.gates.push_back(dagger(*it));
  return out;
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  cx += o.cx;
  single_qubit += o.single_qubit;
  t_like += o.t_like;
  mcry += o.mcry;
  tof += o.tof;
  rtof += o.rtof;
  mcx += o.mcx;
  return *this;
}

GateCounts count_gates(const Circuit& c, Tier tier) {
  GateCounts n;
  for (const auto& g : c.gates) {
    if (tier == Tier::Primitive && !is_primitive(g.kind))
      throw TierViolation("composite gate in primitive-tier count");
    switch (g.kind) {
      case GateKind::CX:
        ++n.cx;
        break;
      case GateKind::T:
      case GateKind::Tdg:
        ++n.t_like;
        ++n.single_qubit;
        break;
      case GateKind::X:
      case GateKind::H:
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::RY:
      case GateKind::RZ:
        ++n.single_qubit;
        break;
      case GateKind::MCRY:
        ++n.mcry;
        break;
      case GateKind::Tof:
        ++n.tof;
        break;
      case GateKind::RTof:
        ++n.rtof;
        break;
      case GateKind::MCX:
        ++n.mcx;
        break;
    }
  }
  return n;
}

namespace {

bool same_wires(const Gate& a, const Gate& b) {
  return a.target == b.target && a.controls == b.controls;
}

// True when b undoes a (adjacent in the list, identical qubits).
bool inverse_pair(const Gate& a, const Gate& b) {
  if (!same_wires(a, b)) return false;
  auto k = [](const Gate& g) { return g.kind; };
  switch (a.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::CX:
      return k(b) == a.kind;
    case GateKind::S:
      return k(b) == GateKind::Sdg;
    case GateKind::Sdg:
      return k(b) == GateKind::S;
    case GateKind::T:
      return k(b) == GateKind::Tdg;
    case GateKind::Tdg:
      return k(b) == GateKind::T;
    default:
      return false;
  }
}

bool mergeable_rotation(const Gate& a, const Gate& b) {
  return (a.kind == GateKind::RY || a.kind == GateKind::RZ) &&
         b.kind == a.kind && b.target == a.target;
}

// RY/RZ have period 4*pi as matrices (2*pi flips the global sign).
bool angle_is_trivial(double a) {
  const double period = 4.0 * std::numbers::pi;
  double r = std::remainder(a, period);
  return std::abs(r) < 1e-12;
}

}  // namespace

Circuit peephole_cancel(const Circuit& c) {
  for (const auto& g : c.gates)
    if (!is_primitive(g.kind))
      throw TierViolation("peephole_cancel expects a primitive-tier circuit");

  std::vector<Gate> work = c.gates;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Gate> next;
    next.reserve(work.size());
    for (const auto& g : work) {
      if (!next.empty() && inverse_pair(next.back(), g)) {
        next.pop_back();
        changed = true;
        continue;
      }
      if (!next.empty() && mergeable_rotation(next.back(), g)) {
        next.back().angle += g.angle;
        if (angle_is_trivial(next.back().angle)) next.pop_back();
        changed = true;
        continue;
      }
      next.push_back(g);
    }
    work.swap(next);
  }
  Circuit out(c.width, c.ancilla_count);
  out.gates = std::move(work);
  return out;
}

std::string export_qasm(const Circuit& c) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(c.total_qubits()) + "];\n";
  char buf[64];
  for (const auto& g : c.gates) {
    if (!is_primitive(g.kind))
      throw TierViolation("export_qasm expects a primitive-tier circuit");
    switch (g.kind) {
      case GateKind::X:
        out += "x q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::H:
        out += "h q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::S:
        out += "s q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::Sdg:
        out += "sdg q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::T:
        out += "t q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::Tdg:
        out += "tdg q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::RY:
      case GateKind::RZ:
        std::snprintf(buf, sizeof buf, "%.17g", g.angle);
        out += (g.kind == GateKind::RY ? "ry(" : "rz(");
        out += buf;
        out += ") q[" + std::to_string(g.target) + "];\n";
        break;
      case GateKind::CX:
        out += "cx q[" + std::to_string(g.controls[0].qubit) + "],q[" +
               std::to_string(g.target) + "];\n";
        break;
      default:
        break;
    }
  }
  return out;
}

nlohmann::json counts_to_json(const GateCounts& n) {
  return nlohmann::json{{"cx", n.cx},     {"single_qubit", n.single_qubit},
                        {"t_like", n.t_like}, {"mcry", n.mcry},
                        {"tof", n.tof},   {"rtof", n.rtof},
                        {"mcx", n.mcx}};
}

}  // namespace uvcc
