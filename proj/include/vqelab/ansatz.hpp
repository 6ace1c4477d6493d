// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "vqelab/statevector.hpp"

namespace vqelab {

enum class GateFamily {
  /// Particle-conserving two-parameter gate.
  Match,
  /// R_y pair, ZZ rotation, R_y pair (five parameters).
  GenericEntangler,
};

int arity(GateFamily family);
GateFamily parse_gate_family(std::string_view name);
std::string_view to_string(GateFamily family);

/// One two-qubit gate slot in the circuit.
struct GatePlacement {
  int layer = 0;  ///< 0-based layer index
  int qa = 0;     ///< lower-order qubit of the gate's local basis
  int qb = 0;
  int param_offset = 0;  ///< first parameter slot; the gate uses `arity` slots

  friend bool operator==(const GatePlacement&, const GatePlacement&) = default;
};

/**
 * Qubit pairs per layer of the checkerboard circuit.
 *
 * Layer 0, 2, ... pairs (0,1), (2,3), ...; layer 1, 3, ... pairs (1,2),
 * (3,4), ... and, for even n, closes with (n-1, 0). For odd n the skipped
 * qubit rotates: n-1 in layer 0, then 0, 1, ...; the remaining qubits are
 * paired consecutively starting after the skipped one. n = 2 always uses
 * (0, 1). Every layer has floor(n/2) disjoint pairs.
 */
std::vector<std::vector<std::pair<int, int>>> checkerboard_layout(int n_qubits,
                                                                 int n_layers);

/// Circuit layout plus gate family. Parameters are stored layer-major, so
/// the first k layers own a prefix of the parameter vector.
class AnsatzSpec {
 public:
  AnsatzSpec(int n_qubits, int n_layers, GateFamily family);

  int n_qubits() const { return n_qubits_; }
  int n_layers() const { return n_layers_; }
  GateFamily family() const { return family_; }
  const std::vector<GatePlacement>& placements() const { return placements_; }

  int gates_per_layer() const { return n_qubits_ / 2; }
  int parameter_count() const;
  /// Parameters owned by the first `layers` layers.
  int parameter_count(int layers) const;

 private:
  int n_qubits_;
  int n_layers_;
  GateFamily family_;
  std::vector<GatePlacement> placements_;
};

/**
 * [[1, 0, 0, 0],
 *  [0, cos t1, e^{i t2} sin t1, 0],
 *  [0, e^{-i t2} sin t1, -cos t1, 0],
 *  [0, 0, 0, 1]]
 */
TwoQubitGate match_gate(double theta1, double theta2);

/// (R_y(t4) x R_y(t5)) exp(-i t3/2 Z x Z) (R_y(t1) x R_y(t2)); t1, t4 act
/// on qa and t2, t5 on qb.
TwoQubitGate generic_entangler(double theta1, double theta2, double theta3,
                               double theta4, double theta5);

TwoQubitGate make_gate(GateFamily family, std::span<const double> params);

/// Basis state for `initial_occupations` followed by every placement in
/// layer order.
StateVector prepare_state(const AnsatzSpec& spec, std::span<const double> theta,
                          std::span<const int> initial_occupations);

/// k particles: even sites 0, 2, 4, ... first, then odd sites 1, 3, ...
std::vector<int> alternating_occupations(int n_qubits, int particles);

}  // namespace vqelab
