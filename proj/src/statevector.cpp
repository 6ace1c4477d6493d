// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace vqelab {

namespace {

constexpr double kUnitarityTol = 1e-10;
constexpr double kNormTol = 1e-10;
constexpr double kImagTol = 1e-10;

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) {
    throw std::out_of_range("qubit " + std::to_string(q) +
                            " out of range for " + std::to_string(n) +
                            " qubits");
  }
}

// Inserts a zero bit at position `bit` of x.
inline std::size_t insert_zero(std::size_t x, int bit) {
  const std::size_t low = x & ((std::size_t{1} << bit) - 1);
  return ((x >> bit) << (bit + 1)) | low;
}

}  // namespace

// ---------------------------------------------------------------------------
// TwoQubitGate

TwoQubitGate::TwoQubitGate(const Matrix& m) : m_(m) {
  const double err = unitarity_error(m);
  if (!(err <= kUnitarityTol)) {
    throw std::invalid_argument("two-qubit gate is not unitary (deviation " +
                                std::to_string(err) + ")");
  }
}

TwoQubitGate TwoQubitGate::identity() {
  Matrix m{};
  for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
  return TwoQubitGate(m);
}

TwoQubitGate TwoQubitGate::adjoint() const {
  Matrix a{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) a[r][c] = std::conj(m_[c][r]);
  }
  return TwoQubitGate(a);
}

double TwoQubitGate::unitarity_error(const Matrix& m) {
  double err = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += m[r][k] * std::conj(m[c][k]);
      if (r == c) s -= 1.0;
      err = std::max(err, std::abs(s));
    }
  }
  return err;
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits <= 0 || n_qubits > kMaxStateQubits) {
    throw std::invalid_argument("state qubit count must be in [1, " +
                                std::to_string(kMaxStateQubits) + "]");
  }
  amps_.assign(std::size_t{1} << n_qubits, Complex(0.0));
  amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2 || !std::has_single_bit(amps_.size())) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  n_qubits_ = std::countr_zero(amps_.size());
  if (n_qubits_ > kMaxStateQubits) {
    throw std::invalid_argument("state too large");
  }
  const double nrm = norm_squared();
  if (!(std::abs(nrm - 1.0) <= kNormTol)) {
    throw std::invalid_argument("state is not normalized (|psi|^2 = " +
                                std::to_string(nrm) + ")");
  }
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

void StateVector::apply(const TwoQubitGate& gate, int qa, int qb) {
  check_qubit(qa, n_qubits_);
  check_qubit(qb, n_qubits_);
  if (qa == qb) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits, got " +
                                std::to_string(qa) + " twice");
  }
  const auto& m = gate.matrix();
  const std::size_t da = std::size_t{1} << qa;
  const std::size_t db = std::size_t{1} << qb;
  const int lo = std::min(qa, qb);
  const int hi = std::max(qa, qb);
  const std::size_t quarter = amps_.size() >> 2;
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i0 = insert_zero(insert_zero(k, lo), hi);
    const std::size_t idx[4] = {i0, i0 | da, i0 | db, i0 | da | db};
    const Complex v[4] = {amps_[idx[0]], amps_[idx[1]], amps_[idx[2]],
                          amps_[idx[3]]};
    for (std::size_t r = 0; r < 4; ++r) {
      amps_[idx[r]] =
          m[r][0] * v[0] + m[r][1] * v[1] + m[r][2] * v[2] + m[r][3] * v[3];
    }
  }
}

void StateVector::apply_x(int qubit) {
  check_qubit(qubit, n_qubits_);
  const std::size_t d = std::size_t{1} << qubit;
  for (std::size_t k = 0; k < (amps_.size() >> 1); ++k) {
    const std::size_t i = insert_zero(k, qubit);
    std::swap(amps_[i], amps_[i | d]);
  }
}

StateVector basis_state(int n_qubits, std::span<const int> occupied) {
  StateVector s(n_qubits);
  std::uint64_t mask = 0;
  for (int q : occupied) {
    check_qubit(q, n_qubits);
    if ((mask >> q) & 1U) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " listed twice in occupation set");
    }
    mask |= std::uint64_t{1} << q;
    s.apply_x(q);
  }
  return s;
}

StateVector apply_two_qubit_gate(StateVector state, const TwoQubitGate& gate,
                                 int qa, int qb) {
  state.apply(gate, qa, qb);
  return state;
}

std::vector<Complex> apply_pauli_sum(const StateVector& state,
                                     const PauliSum& op) {
  if (op.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("observable has " +
                                std::to_string(op.n_qubits()) +
                                " qubits, state has " +
                                std::to_string(state.n_qubits()));
  }
  const auto amps = state.amplitudes();
  std::vector<Complex> out(amps.size(), Complex(0.0));
  for (const auto& t : op.terms()) {
    for (std::size_t c = 0; c < amps.size(); ++c) {
      out[c ^ t.x_mask()] += t.phase_on(c) * amps[c];
    }
  }
  return out;
}

Complex expectation(const StateVector& state, const PauliString& s) {
  if (s.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("Pauli string has " +
                                std::to_string(s.n_qubits()) +
                                " qubits, state has " +
                                std::to_string(state.n_qubits()));
  }
  const auto amps = state.amplitudes();
  const std::uint64_t x = s.x_mask();
  const std::uint64_t z = s.z_mask();
  if (x == 0) {
    // Diagonal string: sum of signed probabilities.
    double acc = 0.0;
    for (std::size_t c = 0; c < amps.size(); ++c) {
      const double p = std::norm(amps[c]);
      acc += (std::popcount(c & z) & 1) ? -p : p;
    }
    return s.coeff() * acc;
  }
  Complex acc = 0.0;
  const int y_count = std::popcount(x & z);
  for (std::size_t c = 0; c < amps.size(); ++c) {
    const Complex term = std::conj(amps[c ^ x]) * amps[c];
    acc += (std::popcount(c & z) & 1) ? -term : term;
  }
  constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return s.coeff() * kIPowers[y_count & 3] * acc;
}

double expectation(const StateVector& state, const PauliSum& obs) {
  if (obs.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument("observable has " +
                                std::to_string(obs.n_qubits()) +
                                " qubits, state has " +
                                std::to_string(state.n_qubits()));
  }
  Complex total = 0.0;
  for (const auto& t : obs.terms()) total += expectation(state, t);
  if (std::abs(total.imag()) > kImagTol) {
    throw std::domain_error(
        "expectation has imaginary part " + std::to_string(total.imag()) +
        "; the observable is not Hermitian");
  }
  return total.real();
}

double energy_variance(const StateVector& state, const PauliSum& h) {
  const auto h_psi = apply_pauli_sum(state, h);
  const auto amps = state.amplitudes();
  Complex mean = 0.0;
  double second = 0.0;
  for (std::size_t c = 0; c < amps.size(); ++c) {
    mean += std::conj(amps[c]) * h_psi[c];
    second += std::norm(h_psi[c]);
  }
  if (std::abs(mean.imag()) > kImagTol) {
    throw std::domain_error("energy has imaginary part " +
                            std::to_string(mean.imag()) +
                            "; the Hamiltonian is not Hermitian");
  }
  return std::max(0.0, second - mean.real() * mean.real());
}

double density(const StateVector& state, int j) {
  check_qubit(j, state.n_qubits());
  const std::size_t mask = std::size_t{1} << j;
  double acc = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t c = 0; c < amps.size(); ++c) {
    if (c & mask) acc += std::norm(amps[c]);
  }
  return acc;
}

double pair_density(const StateVector& state, int j, int k) {
  check_qubit(j, state.n_qubits());
  check_qubit(k, state.n_qubits());
  const std::size_t mask = (std::size_t{1} << j) | (std::size_t{1} << k);
  double acc = 0.0;
  const auto amps = state.amplitudes();
  for (std::size_t c = 0; c < amps.size(); ++c) {
    if ((c & mask) == mask) acc += std::norm(amps[c]);
  }
  return acc;
}

double overlap_squared(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("overlap of vectors with different sizes");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return std::norm(s);
}

}  // namespace vqelab
