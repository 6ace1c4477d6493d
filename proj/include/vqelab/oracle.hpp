// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "vqelab/pauli.hpp"
#include "vqelab/statevector.hpp"

namespace vqelab {

/// Eigenvalues within this distance of the minimum form the ground space.
inline constexpr double kDegeneracyTol = 1e-9;

/// Lowest eigenvalue of a Hermitian operator and an orthonormal basis of its
/// eigenspace, as full 2^n amplitude vectors.
struct GroundSolution {
  int n_qubits = 0;
  double energy = 0.0;
  std::vector<std::vector<Complex>> basis;

  int degeneracy() const { return static_cast<int>(basis.size()); }
};

/// Sorted eigenvalues of the dense image (n <= 14).
std::vector<double> spectrum(const PauliSum& h);

/// Full-space ground solution via a dense Hermitian eigensolve (n <= 14).
GroundSolution exact_ground(const PauliSum& h);

/**
 * Ground solution restricted to basis states of Hamming weight k. Requires h
 * to commute with the total number operator (checked symbolically; throws
 * std::invalid_argument otherwise).
 */
GroundSolution sector_ground(const PauliSum& h, int k);

/**
 * C(m) = <n_0 n_m> - <n_0><n_m> on the ground space. For a degenerate
 * ground space the expectation values are taken in the averaged projector
 * P / d.
 */
double exact_correlation(const GroundSolution& ground, int m);

/// C(m) on a pure state.
double correlation(const StateVector& state, int m);

/// 1 - <psi|P_0|psi>, clamped to [0, 1].
double infidelity(const StateVector& state, const GroundSolution& ground);

}  // namespace vqelab
