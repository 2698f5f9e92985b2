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

#include <iosfwd>
#include <string>

#include "uvcc/config.hpp"

namespace uvcc {

// Composite build -> optional pruning from |0...0> -> expansion -> peephole.
struct BuiltCircuits {
  Circuit composite;  // after pruning when cfg.prune is set
  Circuit primitive;
};
BuiltCircuits build_pipeline(const RunConfig& cfg);

// Worst-case amplitude error of the fully lowered term against the exact
// term unitary. Redundant is checked on the locally physical basis states
// (each pair in 00/01/10), the other methods on the full local space.
double term_worst_error(const ExcitationTerm& t, const ModeSpec& spec,
                        LoweringMethod method, MCRotationScheme mcr);

int cmd_build(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, double tolerance, std::ostream& out);
int cmd_simulate(const RunConfig& cfg, std::ostream& out);
int cmd_tables(const CostModel& model, const std::string& json_path,
               std::ostream& out);

}  // namespace uvcc
