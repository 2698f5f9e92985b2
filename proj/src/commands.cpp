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

#include "uvcc/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uvcc/errors.hpp"

namespace uvcc {

namespace fs = std::filesystem;
using nlohmann::json;

BuiltCircuits build_pipeline(const RunConfig& cfg) {
  const AnsatzSpec a = make_ansatz(cfg);
  BuiltCircuits out;
  out.composite = build_ansatz_composite(a, cfg.method);
  if (cfg.prune)
    out.composite = prune_known_controls(
        out.composite, std::string(static_cast<size_t>(out.composite.width), '0'));
  out.primitive = peephole_cancel(lower_composites(out.composite, cfg.mcr));
  return out;
}

namespace {

// Locally physical patterns: every (g,e) pair of the term in 00, 01 or 10.
std::vector<std::int64_t> comparison_inputs(int m, bool full_space) {
  std::vector<std::int64_t> out;
  const std::int64_t N = std::int64_t{1} << (2 * m);
  for (std::int64_t i = 0; i < N; ++i) {
    if (!full_space) {
      bool ok = true;
      for (int j = 0; j < m; ++j) {
        const bool g = i & (std::int64_t{1} << (2 * m - 1 - 2 * j));
        const bool e = i & (std::int64_t{1} << (2 * m - 2 - 2 * j));
        if (g && e) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
    }
    out.push_back(i);
  }
  return out;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
}

std::string json_pretty(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

double term_worst_error(const ExcitationTerm& t, const ModeSpec& spec,
                        LoweringMethod method, MCRotationScheme mcr) {
  const auto layout = QubitLayout::of(spec);
  const auto pairs = term_qubits(t, spec, layout);
  const int m = t.order();

  Circuit lowered;
  switch (method) {
    case LoweringMethod::Redundant:
      lowered = lower_term_redundant(t, spec, mcr);
      break;
    case LoweringMethod::Givens:
      lowered = lower_term_givens(t, spec, mcr);
      break;
    case LoweringMethod::Exponential:
      lowered = lower_term_exponential(t, spec);
      break;
  }
  const CMatrix oracle = oracle_term_unitary(t, spec, t.theta);

  std::vector<int> roles;
  for (const auto& p : pairs) {
    roles.push_back(p.g);
    roles.push_back(p.e);
  }
  const int n = lowered.total_qubits();
  const auto inputs =
      comparison_inputs(m, method != LoweringMethod::Redundant);

  double worst = 0.0;
  StateVector psi(std::int64_t{1} << n);
  for (const std::int64_t local_in : inputs) {
    psi.setZero();
    std::int64_t full_in = 0;
    for (int r = 0; r < 2 * m; ++r)
      if (local_in & (std::int64_t{1} << (2 * m - 1 - r)))
        full_in |= std::int64_t{1} << (n - 1 - roles[r]);
    psi[full_in] = 1.0;
    for (const auto& g : lowered.gates) apply_gate_inplace(psi, g, n);

    StateVector expect = StateVector::Zero(psi.size());
    const std::int64_t rest = full_in;
    for (std::int64_t lo = 0; lo < oracle.rows(); ++lo) {
      const auto amp = oracle(lo, local_in);
      if (amp == std::complex<double>(0, 0)) continue;
      std::int64_t idx = rest;
      for (int r = 0; r < 2 * m; ++r) {
        const std::int64_t bit = std::int64_t{1} << (n - 1 - roles[r]);
        if (lo & (std::int64_t{1} << (2 * m - 1 - r)))
          idx |= bit;
        else
          idx &= ~bit;
      }
      expect[idx] = amp;
    }
    worst = std::max(worst, (psi - expect).cwiseAbs().maxCoeff());
  }
  return worst;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
  const BuiltCircuits built = build_pipeline(cfg);
  fs::create_directories(cfg.out_dir);
  write_text_file(fs::path(cfg.out_dir) / "circuit.qasm",
                  export_qasm(built.primitive));
  const json counts = {
      {"method", method_name(cfg.method)},
      {"pruned", cfg.prune},
      {"width", built.primitive.width},
      {"ancillas", built.primitive.ancilla_count},
      {"composite", counts_to_json(count_gates(built.composite, Tier::Composite))},
      {"primitive", counts_to_json(count_gates(built.primitive, Tier::Primitive))},
  };
  write_text_file(fs::path(cfg.out_dir) / "counts.json", json_pretty(counts));
  const auto n = count_gates(built.primitive, Tier::Primitive);
  out << "wrote " << (fs::path(cfg.out_dir) / "circuit.qasm").string() << " ("
      << built.primitive.width << " qubits + " << built.primitive.ancilla_count
      << " ancilla, cx=" << n.cx << ", 1q=" << n.single_qubit << ")\n";
  return 0;
}

int cmd_verify(const RunConfig& cfg, double tolerance, std::ostream& out) {
  const AnsatzSpec a = make_ansatz(cfg);
  double worst_term = 0.0;
  for (const auto& t : a.terms)
    worst_term =
        std::max(worst_term, term_worst_error(t, a.spec, cfg.method, cfg.mcr));

  const BuiltCircuits built = build_pipeline(cfg);
  StateVector psi =
      apply_circuit(built.primitive, zero_state(built.primitive.total_qubits()));
  const StateVector oracle = oracle_ansatz_state(a);
  double worst_state = 0.0;
  const std::int64_t anc = std::int64_t{1} << built.primitive.ancilla_count;
  for (std::int64_t i = 0; i < psi.size(); ++i) {
    const std::complex<double> want =
        (i % anc == 0) ? oracle[i / anc] : std::complex<double>(0, 0);
    worst_state = std::max(worst_state, std::abs(psi[i] - want));
  }

  const bool ok = worst_term < tolerance && worst_state < tolerance;
  out << "term-level worst amplitude error:   " << std::scientific
      << std::setprecision(3) << worst_term << "\n"
      << "ansatz-level worst amplitude error: " << worst_state << "\n"
      << "tolerance: " << tolerance << " -> " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const BuiltCircuits built = build_pipeline(cfg);
  const Distribution exact = data_register_distribution(built.primitive);
  const Distribution sampled = sample_shots(exact, cfg.shots, cfg.seed);
  const double tvd_sampled = tvd(exact, sampled);

  json report = {
      {"method", method_name(cfg.method)}, {"shots", cfg.shots},
      {"seed", cfg.seed},                  {"p2", cfg.noise_p2},
      {"exact", exact},                    {"sampled", sampled},
      {"tvd_sampled", tvd_sampled},
  };
  std::optional<Distribution> noisy;
  if (cfg.noise_p2 > 0) {
    noisy = simulate_noisy(built.primitive, {cfg.noise_p2, cfg.seed}, cfg.shots,
                           cfg.seed);
    report["noisy"] = *noisy;
    report["tvd_noisy"] = tvd(exact, *noisy);
  }

  fs::create_directories(cfg.out_dir);
  write_text_file(fs::path(cfg.out_dir) / "distributions.json",
                  json_pretty(report));

  std::ostringstream csv;
  csv << "bitstring,exact,method,value\n";
  auto emit = [&](const Distribution& d, const std::string& name) {
    for (const auto& [bits, p] : exact) {
      const auto it = d.find(bits);
      csv << bits << "," << std::setprecision(12) << p << "," << name << ","
          << (it == d.end() ? 0.0 : it->second) << "\n";
    }
    for (const auto& [bits, p] : d)
      if (!exact.count(bits))
        csv << bits << ",0," << name << "," << p << "\n";
  };
  emit(sampled, "sampled");
  if (noisy) emit(*noisy, "noisy");
  write_text_file(fs::path(cfg.out_dir) / "histogram.csv", csv.str());

  out << "tvd(exact, sampled) = " << std::setprecision(6) << tvd_sampled << "\n";
  if (noisy) out << "tvd(exact, noisy)   = " << tvd(exact, *noisy) << "\n";
  out << "wrote " << (fs::path(cfg.out_dir) / "distributions.json").string()
      << ", histogram.csv\n";
  return 0;
}

namespace {

// Isolated m-excitation term over m two-level modes, all excited 0 -> 1.
ExcitationTerm probe_term(int m, double theta) {
  ExcitationTerm t;
  for (int i = 0; i < m; ++i) t.entries.push_back({i, 0, 1});
  t.theta = theta;
  return t;
}

ModeSpec probe_spec(int m) {
  ModeSpec spec;
  for (int i = 0; i < m; ++i) spec.modes.push_back({"M" + std::to_string(i), 2});
  return spec;
}

Circuit probe_lowered(LoweringMethod method, int m, MCRotationScheme mcr) {
  const auto spec = probe_spec(m);
  const auto t = probe_term(m, 0.3);
  switch (method) {
    case LoweringMethod::Exponential:
      return lower_term_exponential(t, spec);
    case LoweringMethod::Givens:
      return lower_term_givens(t, spec, mcr);
    case LoweringMethod::Redundant:
      return lower_term_redundant(t, spec, mcr);
  }
  return Circuit{};
}

}  // namespace

int cmd_tables(const CostModel& model, const std::string& json_path,
               std::ostream& out) {
  json j;
  out << "Table 1 - CNOT count per m-excitation unitary (2^n-CX multiplexed "
         "rotations)\n";
  out << "  m   exponential        givens             redundant\n";
  out << "      formula  built     formula  built     formula  built\n";
  for (int m = 1; m <= 4; ++m) {
    out << "  " << m << "  ";
    for (auto method : {LoweringMethod::Exponential, LoweringMethod::Givens,
                        LoweringMethod::Redundant}) {
      const auto rec = audit_counts(
          probe_lowered(method, m, MCRotationScheme::multiplex()),
          table1_report(method, m));
      std::ostringstream cell;
      cell << std::setw(7) << rec.expected.formula_cx << "  " << rec.measured_cx;
      if (rec.deviation != 0)
        cell << " (" << (rec.deviation > 0 ? "+" : "") << rec.deviation << ")";
      out << std::left << std::setw(19) << cell.str() << std::right;
      j["table1"].push_back({{"method", method_name(method)},
                             {"m", m},
                             {"formula", rec.expected.formula_cx},
                             {"measured", rec.measured_cx},
                             {"deviation", rec.deviation},
                             {"pass", rec.pass}});
    }
    out << "\n";
  }

  const bool relative = model.kind == CostModel::ToffoliKind::Relative;
  out << "\nTable 2 - ancilla-assisted C^nX -> (An-B) Toffoli family, A="
      << model.A << " B=" << model.B << " ("
      << (relative ? "relative" : "full") << " Toffoli)\n";
  const auto mcr = MCRotationScheme::ancilla(relative);
  for (auto method : {LoweringMethod::Givens, LoweringMethod::Redundant}) {
    CostModel full_model = model;
    full_model.kind = CostModel::ToffoliKind::Full;
    CostModel rel_model = model;
    rel_model.kind = CostModel::ToffoliKind::Relative;
    out << "  " << std::left << std::setw(10) << method_name(method)
        << std::right << " full: ";
    // formula strings rendered from the closed forms
    auto fml = [&](LoweringMethod mm, const CostModel& cm) {
      const std::int64_t at2 = cnot_count_table2(mm, cm, 2);
      const std::int64_t at3 = cnot_count_table2(mm, cm, 3);
      const std::int64_t slope = at3 - at2;
      const std::int64_t icept = at2 - 2 * slope;
      std::ostringstream s;
      s << slope << "m" << std::showpos << icept << std::noshowpos;
      return s.str();
    };
    out << std::setw(9) << fml(method, full_model)
        << "   relative: " << std::setw(9) << fml(method, rel_model) << "   ";
    out << (relative ? "relative" : "full") << " m=2..6:";
    for (int m = 2; m <= 6; ++m) {
      const auto v = cnot_count_table2(method, model, m);
      out << " " << v;
      j["table2"]["cells"].push_back({{"method", method_name(method)},
                                      {"m", m},
                                      {"formula", v}});
    }
    out << "\n";
    j["table2"]["formula"][method_name(method)] = {
        {"full", fml(method, full_model)}, {"relative", fml(method, rel_model)}};
  }
  j["table2"]["A"] = model.A;
  j["table2"]["B"] = model.B;

  out << "  built with the shipped ancilla construction (" << (relative ? "relative" : "full")
      << " chains), m=2..6:\n";
  for (auto method : {LoweringMethod::Givens, LoweringMethod::Redundant}) {
    out << "  " << std::left << std::setw(10) << method_name(method)
        << std::right;
    for (int m = 2; m <= 6; ++m) {
      const auto c = probe_lowered(method, m, mcr);
      const auto measured = count_gates(c, Tier::Primitive).cx;
      const auto formula = cnot_count_table2(method, model, m);
      out << "  " << measured
          << (measured == formula ? "" : (measured > formula ? "^" : "v"));
      j["table2"]["measured"][method_name(method)].push_back(measured);
    }
    out << "   (^/v: above/below the formula)\n";
  }

  const double red = reduction_percent(model);
  out << "\nasymptotic CNOT reduction (redundant vs givens): " << std::fixed
      << std::setprecision(2) << 100 * red << "%\n";
  out << "Toffoli leading terms: redundant "
      << toffoli_leading(LoweringMethod::Redundant, model) << ", givens "
      << toffoli_leading(LoweringMethod::Givens, model) << "\n";
  j["reduction_percent"] = red;
  j["toffoli_leading"] = {
      {"redundant", toffoli_leading(LoweringMethod::Redundant, model)},
      {"givens", toffoli_leading(LoweringMethod::Givens, model)}};

  if (!json_path.empty()) {
    fs::create_directories(fs::path(json_path).parent_path().empty()
                               ? "."
                               : fs::path(json_path).parent_path().string());
    write_text_file(json_path, json_pretty(j));
    out << "wrote " << json_path << "\n";
  }
  return 0;
}

}  // namespace uvcc
