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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "uvcc/commands.hpp"
#include "uvcc/errors.hpp"

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::string> method;
  std::optional<std::string> mcr;
  std::optional<int> A, B;
  std::optional<std::string> toffoli;
  std::optional<std::int64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<double> noise;
  std::optional<std::string> out_dir;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required = true) {
  auto* opt = cmd->add_option("--config", f.config, "run configuration file");
  if (config_required) opt->required();
  cmd->add_option("--method", f.method, "exponential|givens|redundant");
  cmd->add_option("--mcr", f.mcr, "multiplex|ancilla");
  cmd->add_option("--A", f.A, "C^nX family slope");
  cmd->add_option("--B", f.B, "C^nX family offset");
  cmd->add_option("--toffoli", f.toffoli, "full|relative");
  cmd->add_option("--shots", f.shots, "measurement shots");
  cmd->add_option("--seed", f.seed, "sampling seed");
  cmd->add_option("--noise", f.noise, "two-qubit depolarizing probability");
  cmd->add_option("--out", f.out_dir, "output directory");
}

uvcc::RunConfig resolve(const CommonFlags& f) {
  uvcc::RunConfig cfg = uvcc::load_config(f.config);
  if (f.toffoli) {
    if (*f.toffoli == "full")
      cfg.cost.kind = uvcc::CostModel::ToffoliKind::Full;
    else if (*f.toffoli == "relative")
      cfg.cost.kind = uvcc::CostModel::ToffoliKind::Relative;
    else
      throw uvcc::ConfigError(0, "--toffoli must be full|relative");
  }
  const bool use_rtof = cfg.cost.kind == uvcc::CostModel::ToffoliKind::Relative;
  if (f.method) cfg.method = uvcc::parse_method(*f.method);
  if (f.mcr)
    cfg.mcr = uvcc::parse_mcr(*f.mcr, use_rtof);
  else if (f.toffoli && cfg.mcr.kind == uvcc::MCRotationScheme::Kind::AncillaLadder)
    cfg.mcr.use_rtof = use_rtof;
  if (f.A) cfg.cost.A = *f.A;
  if (f.B) cfg.cost.B = *f.B;
  if (f.shots) cfg.shots = *f.shots;
  if (f.seed) cfg.seed = *f.seed;
  if (f.noise) cfg.noise_p2 = *f.noise;
  if (f.out_dir) cfg.out_dir = *f.out_dir;
  if (cfg.shots < 1) throw uvcc::ConfigError(0, "shots must be >= 1");
  if (cfg.noise_p2 < 0 || cfg.noise_p2 > 1)
    throw uvcc::ConfigError(0, "noise must be in [0,1]");
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UVCC state-preparation circuit synthesis and verification"};
  app.require_subcommand(1);

  CommonFlags build_f, verify_f, sim_f;
  double tolerance = 1e-9;
  int tab_A = 2, tab_B = 3;
  std::string tab_toffoli = "relative";
  std::string tab_json;

  auto* build = app.add_subcommand("build", "lower and write qasm + counts");
  add_common(build, build_f);
  auto* verify =
      app.add_subcommand("verify", "check the lowering against the oracle");
  add_common(verify, verify_f);
  verify->add_option("--tolerance", tolerance, "max amplitude error");
  auto* simulate =
      app.add_subcommand("simulate", "exact/sampled/noisy distributions");
  add_common(simulate, sim_f);
  auto* tables = app.add_subcommand("tables", "cost-formula tables");
  tables->add_option("--A", tab_A, "C^nX family slope");
  tables->add_option("--B", tab_B, "C^nX family offset");
  tables->add_option("--toffoli", tab_toffoli, "full|relative");
  tables->add_option("--out", tab_json, "JSON output path");

  try {
    app.parse(argc, argv);
    if (build->parsed()) return uvcc::cmd_build(resolve(build_f), std::cout);
    if (verify->parsed())
      return uvcc::cmd_verify(resolve(verify_f), tolerance, std::cout);
    if (simulate->parsed())
      return uvcc::cmd_simulate(resolve(sim_f), std::cout);
    if (tables->parsed()) {
      uvcc::CostModel model;
      model.A = tab_A;
      model.B = tab_B;
      if (tab_toffoli == "full")
        model.kind = uvcc::CostModel::ToffoliKind::Full;
      else if (tab_toffoli != "relative")
        throw uvcc::ConfigError(0, "--toffoli must be full|relative");
      return uvcc::cmd_tables(model, tab_json, std::cout);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const uvcc::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
