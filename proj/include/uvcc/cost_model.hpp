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
#include <optional>
#include <string>

#include "uvcc/circuit.hpp"
#include "uvcc/lowering.hpp"

namespace uvcc {

// Ancilla-assisted C^nX family: An - B Toffoli-class gates per C^nX.
struct CostModel {
  enum class ToffoliKind { Full, Relative };
  int A = 2;
  int B = 3;
  ToffoliKind kind = ToffoliKind::Relative;
};

// CNOT count of one m-excitation unitary with 2^n-CX multiplexed rotations.
// Exponential: 4^m(2m-1). Givens: 2(2m-1) + 2^(2m-1) - c(m).
// Redundant: (8m-6) + 2^m - c(m). The cancellation credit c(m) is 1 for
// m <= 3 and 0 beyond; measured circuits may sit one CNOT off these values
// and the audit records every such deviation.
std::int64_t cnot_count_table1(LoweringMethod method, int m);

// CNOT count under the ancilla-assisted (An-B) decomposition:
//   Givens    full (24A+4)m - 24A - 12B + 2, relative (12A+4)m - 12A - 6B + 2
//   Redundant full (12A+8)m - 12A - 12B - 2, relative  (6A+8)m -  6A - 6B - 2
std::int64_t cnot_count_table2(LoweringMethod method, const CostModel& model,
                               int m);

// Leading Toffoli-count term, constants left symbolic:
// Redundant "2(A+2)m + C" and Givens "4Am + C'", with A substituted.
std::string toffoli_leading(LoweringMethod method, const CostModel& model);

// Asymptotic CNOT reduction of Redundant over Givens (slope ratio); with a
// finite m, the ratio of the table-2 values at that m.
double reduction_percent(const CostModel& model,
                         std::optional<int> m = std::nullopt);

struct CostReport {
  LoweringMethod method = LoweringMethod::Redundant;
  int m = 1;
  std::int64_t formula_cx = 0;
  std::string formula_text;
};

CostReport table1_report(LoweringMethod method, int m);

struct AuditRecord {
  CostReport expected;
  std::int64_t measured_cx = 0;
  std::int64_t deviation = 0;  // measured - formula
  bool pass = false;           // |deviation| <= 1
};

// Compares the primitive-tier CX tally of a fully lowered circuit against
// the expected formula value.
AuditRecord audit_counts(const Circuit& lowered, const CostReport& expected);

std::string method_name(LoweringMethod method);

}  // namespace uvcc
