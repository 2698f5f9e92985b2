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

#include "uvcc/config.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "uvcc/errors.hpp"

namespace uvcc {

double AngleFraction::radians() const {
  return std::numbers::pi * static_cast<double>(num) /
         static_cast<double>(den);
}

namespace {

// Minimal TOML subset: [section], key = scalar | [array of scalars],
// strings in double quotes, # comments, one entry per line.
struct TomlValue {
  enum class Kind { String, Integer, Float, Boolean, Array } kind;
  std::string str;
  std::int64_t integer = 0;
  double real = 0.0;
  bool boolean = false;
  std::vector<TomlValue> items;
  int line = 0;
};

struct TomlDoc {
  // keys as "section.key"
  std::map<std::string, TomlValue> entries;

  const TomlValue* find(const std::string& key) const {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  }
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view s) {
  bool in_str = false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_str = !in_str;
    if (s[i] == '#' && !in_str) return s.substr(0, i);
  }
  return s;
}

TomlValue parse_scalar(std::string_view tok, int line) {
  TomlValue v;
  v.line = line;
  tok = trim(tok);
  if (tok.empty()) throw ConfigError(line, "empty value");
  if (tok.front() == '"') {
    if (tok.size() < 2 || tok.back() != '"')
      throw ConfigError(line, "unterminated string");
    v.kind = TomlValue::Kind::String;
    v.str = std::string(tok.substr(1, tok.size() - 2));
    return v;
  }
  if (tok == "true" || tok == "false") {
    v.kind = TomlValue::Kind::Boolean;
    v.boolean = tok == "true";
    return v;
  }
  // integer?
  {
    std::int64_t out{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec == std::errc() && p == tok.data() + tok.size()) {
      v.kind = TomlValue::Kind::Integer;
      v.integer = out;
      return v;
    }
  }
  {
    double out{};
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec == std::errc() && p == tok.data() + tok.size()) {
      v.kind = TomlValue::Kind::Float;
      v.real = out;
      return v;
    }
  }
  throw ConfigError(line, "cannot parse value '" + std::string(tok) + "'");
}

TomlValue parse_value(std::string_view tok, int line) {
  tok = trim(tok);
  if (!tok.empty() && tok.front() == '[') {
    if (tok.back() != ']') throw ConfigError(line, "unterminated array");
    TomlValue arr;
    arr.kind = TomlValue::Kind::Array;
    arr.line = line;
    std::string_view body = tok.substr(1, tok.size() - 2);
    size_t start = 0;
    bool in_str = false;
    for (size_t i = 0; i <= body.size(); ++i) {
      if (i < body.size() && body[i] == '"') in_str = !in_str;
      if (i == body.size() || (body[i] == ',' && !in_str)) {
        auto item = trim(body.substr(start, i - start));
        if (!item.empty()) arr.items.push_back(parse_scalar(item, line));
        start = i + 1;
      }
    }
    return arr;
  }
  return parse_scalar(tok, line);
}

int bracket_balance(std::string_view s) {
  int depth = 0;
  bool in_str = false;
  for (char ch : s) {
    if (ch == '"') in_str = !in_str;
    if (in_str) continue;
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
  }
  return depth;
}

TomlDoc parse_toml(const std::string& text) {
  TomlDoc doc;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') throw ConfigError(line, "malformed section header");
      section = std::string(trim(s.substr(1, s.size() - 2)));
      if (section.empty()) throw ConfigError(line, "empty section name");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(line, "expected key = value");
    const auto key = trim(s.substr(0, eq));
    if (key.empty()) throw ConfigError(line, "empty key");
    const std::string full =
        section.empty() ? std::string(key) : section + "." + std::string(key);
    if (doc.entries.count(full))
      throw ConfigError(line, "duplicate key '" + full + "'");

    // arrays may continue over several lines until the bracket closes
    std::string value(trim(s.substr(eq + 1)));
    const int start_line = line;
    int depth = bracket_balance(value);
    while (depth > 0 && std::getline(in, raw)) {
      ++line;
      const auto cont = trim(strip_comment(raw));
      value += " ";
      value += std::string(cont);
      depth = bracket_balance(value);
    }
    if (depth != 0) throw ConfigError(start_line, "unterminated array");
    doc.entries.emplace(full, parse_value(value, start_line));
  }
  return doc;
}

std::int64_t want_int(const TomlValue& v) {
  if (v.kind != TomlValue::Kind::Integer)
    throw ConfigError(v.line, "expected an integer");
  return v.integer;
}

double want_number(const TomlValue& v) {
  if (v.kind == TomlValue::Kind::Integer) return static_cast<double>(v.integer);
  if (v.kind == TomlValue::Kind::Float) return v.real;
  throw ConfigError(v.line, "expected a number");
}

std::string want_string(const TomlValue& v) {
  if (v.kind != TomlValue::Kind::String)
    throw ConfigError(v.line, "expected a string");
  return v.str;
}

bool want_bool(const TomlValue& v) {
  if (v.kind != TomlValue::Kind::Boolean)
    throw ConfigError(v.line, "expected true/false");
  return v.boolean;
}

std::vector<int> want_int_list(const TomlValue& v) {
  if (v.kind != TomlValue::Kind::Array)
    throw ConfigError(v.line, "expected an array");
  std::vector<int> out;
  for (const auto& item : v.items)
    out.push_back(static_cast<int>(want_int(item)));
  return out;
}

std::vector<int> parse_occupation(const std::string& s, int line) {
  std::vector<int> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      const std::string tok(trim(std::string_view(s).substr(start, i - start)));
      if (tok.empty()) throw ConfigError(line, "empty occupation entry");
      int val{};
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw ConfigError(line, "bad occupation number '" + tok + "'");
      out.push_back(val);
      start = i + 1;
    }
  }
  return out;
}

AngleFraction parse_angle(const std::string& s, int line) {
  AngleFraction f;
  const auto slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  auto read = [&](const std::string& tok) {
    std::int64_t val{};
    auto t = trim(tok);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), val);
    if (ec != std::errc() || p != t.data() + t.size())
      throw ConfigError(line, "bad angle fraction '" + s + "'");
    return val;
  };
  f.num = read(num);
  f.den = slash == std::string::npos ? 1 : read(s.substr(slash + 1));
  if (f.den == 0) throw ConfigError(line, "angle denominator is zero");
  return f;
}

}  // namespace

LoweringMethod parse_method(const std::string& name) {
  if (name == "exponential") return LoweringMethod::Exponential;
  if (name == "givens") return LoweringMethod::Givens;
  if (name == "redundant") return LoweringMethod::Redundant;
  throw ConfigError(0, "unknown method '" + name +
                           "' (expected exponential|givens|redundant)");
}

MCRotationScheme parse_mcr(const std::string& name, bool use_rtof) {
  if (name == "multiplex") return MCRotationScheme::multiplex();
  if (name == "ancilla") return MCRotationScheme::ancilla(use_rtof);
  throw ConfigError(0, "unknown mcr scheme '" + name +
                           "' (expected multiplex|ancilla)");
}

RunConfig parse_config_text(const std::string& text) {
  const TomlDoc doc = parse_toml(text);
  RunConfig cfg;

  const auto* levels = doc.find("modes.levels");
  if (!levels) throw ConfigError(0, "missing modes.levels");
  const auto ds = want_int_list(*levels);
  std::vector<std::string> labels;
  if (const auto* lv = doc.find("modes.labels")) {
    if (lv->kind != TomlValue::Kind::Array)
      throw ConfigError(lv->line, "modes.labels must be an array");
    for (const auto& item : lv->items) labels.push_back(want_string(item));
    if (labels.size() != ds.size())
      throw ConfigError(lv->line, "modes.labels length != modes.levels length");
  }
  for (size_t i = 0; i < ds.size(); ++i)
    cfg.modes.modes.push_back(
        {i < labels.size() ? labels[i] : "M" + std::to_string(i), ds[i]});
  try {
    cfg.modes.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(levels->line, e.what());
  }

  if (const auto* ref = doc.find("ansatz.reference"))
    cfg.reference = want_int_list(*ref);
  else
    cfg.reference.assign(ds.size(), 0);
  if (cfg.reference.size() != ds.size())
    throw ConfigError(0, "ansatz.reference length != mode count");

  if (const auto* tv = doc.find("ansatz.targets")) {
    if (tv->kind != TomlValue::Kind::Array)
      throw ConfigError(tv->line, "ansatz.targets must be an array");
    for (const auto& item : tv->items)
      cfg.targets.push_back(parse_occupation(want_string(item), item.line));
  }
  if (const auto* mo = doc.find("ansatz.max_order"))
    cfg.max_order = static_cast<int>(want_int(*mo));
  if (cfg.targets.empty() && !cfg.max_order)
    throw ConfigError(0, "need ansatz.targets or ansatz.max_order");
  if (!cfg.targets.empty() && cfg.max_order)
    throw ConfigError(0, "ansatz.targets and ansatz.max_order are exclusive");

  const auto* angles = doc.find("ansatz.angles_pi");
  if (!angles) throw ConfigError(0, "missing ansatz.angles_pi");
  if (angles->kind != TomlValue::Kind::Array)
    throw ConfigError(angles->line, "ansatz.angles_pi must be an array");
  for (const auto& item : angles->items)
    cfg.angles_pi.push_back(parse_angle(want_string(item), item.line));

  if (const auto* v = doc.find("lowering.method"))
    cfg.method = parse_method(want_string(*v));
  bool use_rtof = true;
  if (const auto* v = doc.find("lowering.toffoli")) {
    const auto s = want_string(*v);
    if (s == "full")
      use_rtof = false;
    else if (s != "relative")
      throw ConfigError(v->line, "lowering.toffoli must be full|relative");
    cfg.cost.kind = use_rtof ? CostModel::ToffoliKind::Relative
                             : CostModel::ToffoliKind::Full;
  }
  if (const auto* v = doc.find("lowering.mcr"))
    cfg.mcr = parse_mcr(want_string(*v), use_rtof);
  if (const auto* v = doc.find("lowering.prune")) cfg.prune = want_bool(*v);

  if (const auto* v = doc.find("cost.A")) cfg.cost.A = static_cast<int>(want_int(*v));
  if (const auto* v = doc.find("cost.B")) cfg.cost.B = static_cast<int>(want_int(*v));

  if (const auto* v = doc.find("simulate.shots")) cfg.shots = want_int(*v);
  if (const auto* v = doc.find("simulate.seed"))
    cfg.seed = static_cast<std::uint64_t>(want_int(*v));
  if (const auto* v = doc.find("simulate.noise_p2")) cfg.noise_p2 = want_number(*v);
  if (const auto* v = doc.find("output.dir")) cfg.out_dir = want_string(*v);

  if (cfg.shots < 1) throw ConfigError(0, "simulate.shots must be >= 1");
  if (cfg.noise_p2 < 0 || cfg.noise_p2 > 1)
    throw ConfigError(0, "simulate.noise_p2 must be in [0,1]");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

AnsatzSpec make_ansatz(const RunConfig& cfg) {
  AnsatzSpec a;
  a.spec = cfg.modes;
  a.reference.occupation = cfg.reference;

  if (cfg.max_order) {
    a.terms = enumerate_reference_excitations(cfg.modes, *cfg.max_order);
  } else {
    for (const auto& tgt : cfg.targets) {
      if (tgt.size() != cfg.reference.size())
        throw ConfigError(0, "target tuple length != mode count");
      ExcitationTerm t;
      for (size_t m = 0; m < tgt.size(); ++m)
        if (tgt[m] != cfg.reference[m])
          t.entries.push_back(
              {static_cast<int>(m), cfg.reference[m], tgt[m]});
      if (t.entries.empty())
        throw ConfigError(0, "target equals the reference state");
      a.terms.push_back(std::move(t));
    }
  }
  if (cfg.angles_pi.size() != a.terms.size())
    throw ConfigError(0, "angle count " + std::to_string(cfg.angles_pi.size()) +
                             " != term count " + std::to_string(a.terms.size()));
  for (size_t i = 0; i < a.terms.size(); ++i)
    a.terms[i].theta = cfg.angles_pi[i].radians();

  // surface invalid levels and overlapping modes now, with config context
  const auto layout = QubitLayout::of(a.spec);
  for (const auto& t : a.terms) {
    try {
      term_qubits(t, a.spec, layout);
    } catch (const InvalidTerm& e) {
      throw ConfigError(0, e.what());
    }
  }
  return a;
}

}  // namespace uvcc
