// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "vqelab/pauli.hpp"

namespace vqelab {

/// Largest register simulated densely.
inline constexpr int kMaxStateQubits = 24;

/**
 * @brief A 4x4 unitary acting on an ordered qubit pair (qa, qb).
 *
 * Row/column index is bit(qa) + 2 * bit(qb), so qa is the lower-order bit of
 * the gate's local basis |00>, |01>, |10>, |11> (written as |b_qb b_qa>).
 * Construction rejects matrices that are not unitary within 1e-10.
 */
class TwoQubitGate {
 public:
  using Matrix = std::array<std::array<Complex, 4>, 4>;

  explicit TwoQubitGate(const Matrix& m);

  static TwoQubitGate identity();

  const Matrix& matrix() const { return m_; }
  Complex operator()(int row, int col) const {
    return m_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  TwoQubitGate adjoint() const;

  /// Largest elementwise deviation of U U† from the identity.
  static double unitarity_error(const Matrix& m);

 private:
  Matrix m_;
};

/// Dense pure state of n qubits; qubit j is bit j of the amplitude index.
class StateVector {
 public:
  /// |0...0>
  explicit StateVector(int n_qubits);

  /// Takes ownership of amplitudes; the size must be a power of two and the
  /// norm 1 within 1e-10.
  explicit StateVector(std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm_squared() const;

  /// Applies gate in place on (qa, qb); throws on an index clash.
  void apply(const TwoQubitGate& gate, int qa, int qb);

  /// Applies X on one qubit in place.
  void apply_x(int qubit);

 private:
  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Computational basis state with |1> exactly at the listed qubits.
StateVector basis_state(int n_qubits, std::span<const int> occupied);

/// Copying form of StateVector::apply.
StateVector apply_two_qubit_gate(StateVector state, const TwoQubitGate& gate,
                                 int qa, int qb);

/// a|psi> as a raw amplitude vector.
std::vector<Complex> apply_pauli_sum(const StateVector& state,
                                     const PauliSum& op);

/// <psi|P|psi> for a single weighted string.
Complex expectation(const StateVector& state, const PauliString& s);

/**
 * Real expectation of a Hermitian observable. Throws std::domain_error when
 * the imaginary residual exceeds 1e-10 and std::invalid_argument on a qubit
 * count mismatch.
 */
double expectation(const StateVector& state, const PauliSum& obs);

/// <H^2> - <H>^2, clamped at zero.
double energy_variance(const StateVector& state, const PauliSum& h);

/// <n_j> with n_j = (I - Z_j) / 2.
double density(const StateVector& state, int j);

/// <n_j n_k>
double pair_density(const StateVector& state, int j, int k);

/// |<a|b>|^2
double overlap_squared(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace vqelab
