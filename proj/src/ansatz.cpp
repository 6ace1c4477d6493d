// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/ansatz.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vqelab {

namespace {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

Matrix2 ry(double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  return {{{c, -s}, {s, c}}};
}

// (b on qb) x (a on qa) in the local index bit(qa) + 2 bit(qb).
TwoQubitGate::Matrix kron_local(const Matrix2& a, const Matrix2& b) {
  TwoQubitGate::Matrix m{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      m[r][c] = a[r & 1][c & 1] * b[r >> 1][c >> 1];
    }
  }
  return m;
}

TwoQubitGate::Matrix matmul(const TwoQubitGate::Matrix& x,
                            const TwoQubitGate::Matrix& y) {
  TwoQubitGate::Matrix m{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t k = 0; k < 4; ++k) m[r][c] += x[r][k] * y[k][c];
    }
  }
  return m;
}

}  // namespace

int arity(GateFamily family) {
  return family == GateFamily::Match ? 2 : 5;
}

GateFamily parse_gate_family(std::string_view name) {
  if (name == "match") return GateFamily::Match;
  if (name == "generic") return GateFamily::GenericEntangler;
  throw std::invalid_argument("unknown gate family '" + std::string(name) +
                              "' (expected match or generic)");
}

std::string_view to_string(GateFamily family) {
  return family == GateFamily::Match ? "match" : "generic";
}

std::vector<std::vector<std::pair<int, int>>> checkerboard_layout(int n_qubits,
                                                                 int n_layers) {
  if (n_qubits < 2) {
    throw std::invalid_argument("checkerboard ansatz needs at least 2 qubits, "
                                "got " + std::to_string(n_qubits));
  }
  if (n_layers < 0) {
    throw std::invalid_argument("layer count must be non-negative");
  }
  const int n = n_qubits;
  std::vector<std::vector<std::pair<int, int>>> layers;
  layers.reserve(static_cast<std::size_t>(n_layers));
  for (int layer = 0; layer < n_layers; ++layer) {
    std::vector<std::pair<int, int>> pairs;
    if (n == 2) {
      pairs.emplace_back(0, 1);
    } else {
      // First qubit of the first pair; for odd n this follows the skipped one.
      const int start =
          (n % 2 == 0) ? (layer % 2) : ((layer - 1 + n) % n + 1) % n;
      for (int g = 0; g < n / 2; ++g) {
        pairs.emplace_back((start + 2 * g) % n, (start + 2 * g + 1) % n);
      }
    }
    layers.push_back(std::move(pairs));
  }
  return layers;
}

AnsatzSpec::AnsatzSpec(int n_qubits, int n_layers, GateFamily family)
    : n_qubits_(n_qubits), n_layers_(n_layers), family_(family) {
  const auto layout = checkerboard_layout(n_qubits, n_layers);
  int offset = 0;
  for (int layer = 0; layer < n_layers; ++layer) {
    for (const auto& [qa, qb] : layout[static_cast<std::size_t>(layer)]) {
      placements_.push_back({layer, qa, qb, offset});
      offset += arity(family);
    }
  }
}

int AnsatzSpec::parameter_count() const { return parameter_count(n_layers_); }

int AnsatzSpec::parameter_count(int layers) const {
  return arity(family_) * layers * gates_per_layer();
}

TwoQubitGate match_gate(double theta1, double theta2) {
  const double c = std::cos(theta1);
  const double s = std::sin(theta1);
  const Complex e = std::polar(1.0, theta2);
  TwoQubitGate::Matrix m{};
  m[0][0] = 1.0;
  m[1][1] = c;
  m[1][2] = e * s;
  m[2][1] = std::conj(e) * s;
  m[2][2] = -c;
  m[3][3] = 1.0;
  return TwoQubitGate(m);
}

TwoQubitGate generic_entangler(double theta1, double theta2, double theta3,
                               double theta4, double theta5) {
  const auto first = kron_local(ry(theta1), ry(theta2));
  const auto last = kron_local(ry(theta4), ry(theta5));
  TwoQubitGate::Matrix zz{};
  const Complex same = std::polar(1.0, -theta3 / 2);
  const Complex diff = std::polar(1.0, theta3 / 2);
  zz[0][0] = same;
  zz[1][1] = diff;
  zz[2][2] = diff;
  zz[3][3] = same;
  return TwoQubitGate(matmul(last, matmul(zz, first)));
}

TwoQubitGate make_gate(GateFamily family, std::span<const double> params) {
  if (static_cast<int>(params.size()) != arity(family)) {
    throw std::invalid_argument("gate family " + std::string(to_string(family)) +
                                " takes " + std::to_string(arity(family)) +
                                " parameters, got " +
                                std::to_string(params.size()));
  }
  if (family == GateFamily::Match) return match_gate(params[0], params[1]);
  return generic_entangler(params[0], params[1], params[2], params[3],
                           params[4]);
}

StateVector prepare_state(const AnsatzSpec& spec, std::span<const double> theta,
                          std::span<const int> initial_occupations) {
  if (static_cast<int>(theta.size()) != spec.parameter_count()) {
    throw std::invalid_argument(
        "ansatz expects " + std::to_string(spec.parameter_count()) +
        " parameters, got " + std::to_string(theta.size()));
  }
  StateVector state = basis_state(spec.n_qubits(), initial_occupations);
  const auto k = static_cast<std::size_t>(arity(spec.family()));
  for (const auto& p : spec.placements()) {
    const auto gate = make_gate(
        spec.family(), theta.subspan(static_cast<std::size_t>(p.param_offset), k));
    state.apply(gate, p.qa, p.qb);
  }
  return state;
}

std::vector<int> alternating_occupations(int n_qubits, int particles) {
  if (particles < 0 || particles > n_qubits) {
    throw std::invalid_argument("particle count " + std::to_string(particles) +
                                " out of range for " +
                                std::to_string(n_qubits) + " sites");
  }
  std::vector<int> occ;
  for (int q = 0; q < n_qubits && static_cast<int>(occ.size()) < particles;
       q += 2) {
    occ.push_back(q);
  }
  for (int q = 1; q < n_qubits && static_cast<int>(occ.size()) < particles;
       q += 2) {
    occ.push_back(q);
  }
  return occ;
}

}  // namespace vqelab
