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

#include "uvcc/cost_model.hpp"

#include <cmath>
#include <stdexcept>

namespace uvcc {

namespace {

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

std::int64_t cancellation_credit(int m) { return m <= 3 ? 1 : 0; }

}  // namespace

std::string method_name(LoweringMethod method) {
  switch (method) {
    case LoweringMethod::Exponential:
      return "exponential";
    case LoweringMethod::Givens:
      return "givens";
    case LoweringMethod::Redundant:
      return "redundant";
  }
  return "?";
}

std::int64_t cnot_count_table1(LoweringMethod method, int m) {
  if (m < 1) throw std::invalid_argument("cnot_count_table1: m < 1");
  switch (method) {
    case LoweringMethod::Exponential: {
      std::int64_t p = 1;
      for (int i = 0; i < m; ++i) p *= 4;
      return p * (2 * m - 1);
    }
    case LoweringMethod::Givens:
      return 2 * (2 * m - 1) + pow2(2 * m - 1) - cancellation_credit(m);
    case LoweringMethod::Redundant:
      return (8 * m - 6) + pow2(m) - cancellation_credit(m);
  }
  return 0;
}

std::int64_t cnot_count_table2(LoweringMethod method, const CostModel& model,
                               int m) {
  if (m < 2) throw std::invalid_argument("cnot_count_table2: m < 2");
  const std::int64_t A = model.A, B = model.B, M = m;
  const bool full = model.kind == CostModel::ToffoliKind::Full;
  switch (method) {
    case LoweringMethod::Givens:
      return full ? (24 * A + 4) * M - 24 * A - 12 * B + 2
                  : (12 * A + 4) * M - 12 * A - 6 * B + 2;
    case LoweringMethod::Redundant:
      return full ? (12 * A + 8) * M - 12 * A - 12 * B - 2
                  : (6 * A + 8) * M - 6 * A - 6 * B - 2;
    case LoweringMethod::Exponential:
      throw std::invalid_argument(
          "cnot_count_table2: exponential method has no ancilla form");
  }
  return 0;
}

std::string toffoli_leading(LoweringMethod method, const CostModel& model) {
  switch (method) {
    case LoweringMethod::Redundant:
      return std::to_string(2 * (model.A + 2)) + "m + C";
    case LoweringMethod::Givens:
      return std::to_string(4 * model.A) + "m + C'";
    case LoweringMethod::Exponential:
      throw std::invalid_argument("toffoli_leading: exponential unsupported");
  }
  return {};
}

double reduction_percent(const CostModel& model, std::optional<int> m) {
  if (m) {
    const double r = static_cast<double>(
        cnot_count_table2(LoweringMethod::Redundant, model, *m));
    const double g = static_cast<double>(
        cnot_count_table2(LoweringMethod::Givens, model, *m));
    return 1.0 - r / g;
  }
  const double A = model.A;
  const bool full = model.kind == CostModel::ToffoliKind::Full;
  const double slope_r = full ? 12 * A + 8 : 6 * A + 8;
  const double slope_g = full ? 24 * A + 4 : 12 * A + 4;
  return 1.0 - slope_r / slope_g;
}

CostReport table1_report(LoweringMethod method, int m) {
  CostReport r;
  r.method = method;
  r.m = m;
  r.formula_cx = cnot_count_table1(method, m);
  switch (method) {
    case LoweringMethod::Exponential:
      r.formula_text = "4^m(2m-1)";
      break;
    case LoweringMethod::Givens:
      r.formula_text = "2(2m-1) + 2^(2m-1) - c(m)";
      break;
    case LoweringMethod::Redundant:
      r.formula_text = "(8m-6) + 2^m - c(m)";
      break;
  }
  return r;
}

AuditRecord audit_counts(const Circuit& lowered, const CostReport& expected) {
  AuditRecord rec;
  rec.expected = expected;
  rec.measured_cx = count_gates(lowered, Tier::Primitive).cx;
  rec.deviation = rec.measured_cx - expected.formula_cx;
  rec.pass = rec.deviation >= -1 && rec.deviation <= 1;
  return rec;
}

}  // namespace uvcc
