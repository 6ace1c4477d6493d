// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vqelab/ansatz.hpp"

namespace vqelab {

/// Raised for invalid configuration files, keys, or value combinations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExperimentKind { Convergence, Correlation, Plateau, ExactDiag };
enum class ModelKind { HubbardNnn, Tfim };
enum class QubitMapping { JordanWigner, BravyiKitaev, None };

std::string_view to_string(ExperimentKind k);
std::string_view to_string(ModelKind k);
std::string_view to_string(QubitMapping m);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Convergence;
  ModelKind model = ModelKind::HubbardNnn;
  double t = 1.0;
  double v1 = 2.0;
  double v2 = 1.0;
  double h = 1.0;
  bool periodic = true;
  QubitMapping mapping = QubitMapping::JordanWigner;
  GateFamily family = GateFamily::Match;
  std::vector<int> qubits{4};
  /// Depths to report; empty means 0..max_layers (1..max_layers for plateau).
  std::vector<int> layers;
  int max_layers = 4;
  /// Particle count for number-conserving runs; empty means floor(n/2).
  std::optional<int> filling;
  int samples = 50;
  double delta = 1e-6;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string output;

  /// Depths that will be reported, ascending.
  std::vector<int> reported_layers() const;
  int particles(int n_qubits) const;
  /// Matches conserve particle number only under Jordan-Wigner.
  bool number_conserving() const;

  /// Throws ConfigError on invalid combinations.
  void validate() const;

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

/// Flat `key = value` lines with `#` comments. Keys are the long CLI flag
/// names without dashes (e.g. `max-layers`).
using Settings = std::map<std::string, std::string>;

Settings parse_config_text(std::string_view text);

/// Throws ConfigError naming the path when it cannot be read.
Settings read_config_file(const std::string& path);

/// Keys understood by resolve_config().
const std::vector<std::string>& config_keys();

/// Builds a validated configuration; unknown keys and bad values throw.
ExperimentConfig resolve_config(ExperimentKind kind, const Settings& settings);

/// Fully resolved settings; resolve_config(kind, to_settings(cfg)) == cfg.
Settings to_settings(const ExperimentConfig& cfg);

}  // namespace vqelab
