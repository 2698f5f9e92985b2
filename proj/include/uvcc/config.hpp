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
#include <vector>

#include "uvcc/ansatz.hpp"
#include "uvcc/cost_model.hpp"
#include "uvcc/lowering.hpp"
#include "uvcc/simulator.hpp"

namespace uvcc {

// Angle as an exact rational multiple of pi (configs write e.g. "7/8").
struct AngleFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double radians() const;
};

struct RunConfig {
  ModeSpec modes;
  std::vector<int> reference;
  std::vector<std::vector<int>> targets;  // occupation tuples, or:
  std::optional<int> max_order;
  std::vector<AngleFraction> angles_pi;
  LoweringMethod method = LoweringMethod::Redundant;
  MCRotationScheme mcr = MCRotationScheme::multiplex();
  bool prune = true;
  CostModel cost;
  std::int64_t shots = 1024;
  std::uint64_t seed = 1;
  double noise_p2 = 0.0;
  std::string out_dir = ".";
};

// Parses the [modes]/[ansatz]/[lowering]/[cost]/[simulate]/[output]
// sections; throws ConfigError with the offending line.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

// Resolves targets/max_order and binds angles positionally.
AnsatzSpec make_ansatz(const RunConfig& cfg);

LoweringMethod parse_method(const std::string& name);
MCRotationScheme parse_mcr(const std::string& name, bool use_rtof);

}  // namespace uvcc
