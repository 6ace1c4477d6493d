// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace vqelab {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value,
                            const std::string& expected) {
  throw ConfigError("invalid value '" + value + "' for '" + key +
                    "' (expected " + expected + ")");
}

long long parse_int(const std::string& key, const std::string& value) {
  long long out = 0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value, "an integer");
  return out;
}

double parse_real(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    bad_value(key, value, "a finite real number");
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = value;
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, value, "true or false");
}

std::vector<int> parse_int_list(const std::string& key,
                                const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) bad_value(key, value, "a comma-separated integer list");
    out.push_back(static_cast<int>(parse_int(key, item)));
  }
  if (out.empty()) bad_value(key, value, "a comma-separated integer list");
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::string_view to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Convergence:
      return "convergence";
    case ExperimentKind::Correlation:
      return "correlation";
    case ExperimentKind::Plateau:
      return "plateau";
    case ExperimentKind::ExactDiag:
      return "ed";
  }
  return "unknown";
}

std::string_view to_string(ModelKind k) {
  return k == ModelKind::HubbardNnn ? "hubbard-nnn" : "tfim";
}

std::string_view to_string(QubitMapping m) {
  switch (m) {
    case QubitMapping::JordanWigner:
      return "jw";
    case QubitMapping::BravyiKitaev:
      return "bk";
    case QubitMapping::None:
      return "none";
  }
  return "unknown";
}

std::vector<int> ExperimentConfig::reported_layers() const {
  std::vector<int> out = layers;
  if (out.empty()) {
    const int first = experiment == ExperimentKind::Plateau ? 1 : 0;
    for (int l = first; l <= max_layers; ++l) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (experiment == ExperimentKind::Plateau) {
    // Depth 0 has no parameters and so no gradient.
    out.erase(std::remove(out.begin(), out.end(), 0), out.end());
  }
  return out;
}

int ExperimentConfig::particles(int n_qubits) const {
  return filling.value_or(n_qubits / 2);
}

bool ExperimentConfig::number_conserving() const {
  return family == GateFamily::Match && mapping == QubitMapping::JordanWigner &&
         model == ModelKind::HubbardNnn;
}

void ExperimentConfig::validate() const {
  if (model == ModelKind::Tfim && mapping != QubitMapping::None) {
    throw ConfigError("model tfim is built on qubits directly; use mapping none");
  }
  if (model == ModelKind::HubbardNnn && mapping == QubitMapping::None) {
    throw ConfigError("mapping none is only valid for model tfim");
  }
  if (family == GateFamily::Match && mapping != QubitMapping::JordanWigner) {
    throw ConfigError(
        "gate family match conserves particles only under mapping jw");
  }
  if (qubits.empty()) throw ConfigError("qubits list is empty");
  for (int n : qubits) {
    if (n < 2 || n > kMaxDenseQubits) {
      throw ConfigError("qubit count " + std::to_string(n) +
                        " out of range [2, " + std::to_string(kMaxDenseQubits) +
                        "]");
    }
    if (periodic && n < 3) {
      throw ConfigError("periodic chains need at least 3 sites");
    }
    if (filling && (*filling < 0 || *filling > n)) {
      throw ConfigError("filling " + std::to_string(*filling) +
                        " out of range for " + std::to_string(n) + " sites");
    }
  }
  for (int l : layers) {
    if (l < 0) throw ConfigError("layer counts must be non-negative");
  }
  if (max_layers < 0) throw ConfigError("max-layers must be non-negative");
  if (samples < 2) throw ConfigError("samples must be at least 2");
  if (!(delta > 0.0)) throw ConfigError("delta must be positive");
  if (threads < 1) throw ConfigError("threads must be at least 1");
}

Settings parse_config_text(std::string_view text) {
  Settings out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value', got '" + body + "'");
    }
    std::string key = trim(body.substr(0, eq));
    std::string value = trim(body.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": empty key");
    }
    out[key] = value;
  }
  return out;
}

Settings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "model",   "mapping", "family",  "qubits", "layers", "max-layers",
      "t",       "v1",      "v2",      "h",      "periodic", "filling",
      "samples", "delta",   "seed",    "threads", "output"};
  return keys;
}

ExperimentConfig resolve_config(ExperimentKind kind, const Settings& settings) {
  const auto& keys = config_keys();
  for (const auto& [key, value] : settings) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = settings.find(key);
    return it == settings.end() ? nullptr : &it->second;
  };

  ExperimentConfig cfg;
  cfg.experiment = kind;
  if (const auto* v = get("model")) {
    if (*v == "hubbard-nnn" || *v == "hubbard_nnn") {
      cfg.model = ModelKind::HubbardNnn;
    } else if (*v == "tfim") {
      cfg.model = ModelKind::Tfim;
    } else {
      bad_value("model", *v, "hubbard-nnn or tfim");
    }
  }
  cfg.mapping = cfg.model == ModelKind::Tfim ? QubitMapping::None
                                             : QubitMapping::JordanWigner;
  if (const auto* v = get("mapping")) {
    if (*v == "jw") {
      cfg.mapping = QubitMapping::JordanWigner;
    } else if (*v == "bk") {
      cfg.mapping = QubitMapping::BravyiKitaev;
    } else if (*v == "none") {
      cfg.mapping = QubitMapping::None;
    } else {
      bad_value("mapping", *v, "jw, bk or none");
    }
  }
  cfg.family = (cfg.model == ModelKind::HubbardNnn &&
                cfg.mapping == QubitMapping::JordanWigner)
                   ? GateFamily::Match
                   : GateFamily::GenericEntangler;
  if (const auto* v = get("family")) {
    try {
      cfg.family = parse_gate_family(*v);
    } catch (const std::invalid_argument&) {
      bad_value("family", *v, "match or generic");
    }
  }
  if (const auto* v = get("qubits")) cfg.qubits = parse_int_list("qubits", *v);
  if (const auto* v = get("layers")) cfg.layers = parse_int_list("layers", *v);
  if (const auto* v = get("max-layers")) {
    cfg.max_layers = static_cast<int>(parse_int("max-layers", *v));
  }
  if (!cfg.layers.empty()) {
    cfg.max_layers = *std::max_element(cfg.layers.begin(), cfg.layers.end());
  }
  if (const auto* v = get("t")) cfg.t = parse_real("t", *v);
  if (const auto* v = get("v1")) cfg.v1 = parse_real("v1", *v);
  if (const auto* v = get("v2")) cfg.v2 = parse_real("v2", *v);
  if (const auto* v = get("h")) cfg.h = parse_real("h", *v);
  if (const auto* v = get("periodic")) cfg.periodic = parse_bool("periodic", *v);
  if (const auto* v = get("filling")) {
    if (*v != "half") cfg.filling = static_cast<int>(parse_int("filling", *v));
  }
  if (const auto* v = get("samples")) {
    cfg.samples = static_cast<int>(parse_int("samples", *v));
  }
  if (const auto* v = get("delta")) cfg.delta = parse_real("delta", *v);
  if (const auto* v = get("seed")) {
    const auto s = parse_int("seed", *v);
    if (s < 0) bad_value("seed", *v, "a non-negative integer");
    cfg.seed = static_cast<std::uint64_t>(s);
  }
  if (const auto* v = get("threads")) {
    cfg.threads = static_cast<int>(parse_int("threads", *v));
  }
  if (const auto* v = get("output")) cfg.output = *v;
  cfg.validate();
  return cfg;
}

Settings to_settings(const ExperimentConfig& cfg) {
  Settings s;
  s["model"] = std::string(to_string(cfg.model));
  s["mapping"] = std::string(to_string(cfg.mapping));
  s["family"] = std::string(to_string(cfg.family));
  s["qubits"] = join(cfg.qubits);
  if (!cfg.layers.empty()) s["layers"] = join(cfg.layers);
  s["max-layers"] = std::to_string(cfg.max_layers);
  s["t"] = format_real(cfg.t);
  s["v1"] = format_real(cfg.v1);
  s["v2"] = format_real(cfg.v2);
  s["h"] = format_real(cfg.h);
  s["periodic"] = cfg.periodic ? "true" : "false";
  s["filling"] = cfg.filling ? std::to_string(*cfg.filling) : "half";
  s["samples"] = std::to_string(cfg.samples);
  s["delta"] = format_real(cfg.delta);
  s["seed"] = std::to_string(cfg.seed);
  s["threads"] = std::to_string(cfg.threads);
  if (!cfg.output.empty()) s["output"] = cfg.output;
  return s;
}

}  // namespace vqelab
