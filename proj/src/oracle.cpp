// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vqelab/models.hpp"

namespace vqelab {

namespace {

constexpr double kCommutatorTol = 1e-8;

bool is_real(const Eigen::MatrixXcd& m) {
  return m.imag().cwiseAbs().maxCoeff() == 0.0;
}

// Eigen-decomposes a Hermitian matrix; columns of `vectors` are eigenvectors
// in ascending eigenvalue order.
void hermitian_eigen(const Eigen::MatrixXcd& m, Eigen::VectorXd& values,
                     Eigen::MatrixXcd& vectors) {
  if (is_real(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real());
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("eigensolver failed to converge");
    }
    values = solver.eigenvalues();
    vectors = solver.eigenvectors().cast<Complex>();
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("eigensolver failed to converge");
    }
    values = solver.eigenvalues();
    vectors = solver.eigenvectors();
  }
}

GroundSolution ground_from_eigen(int n_qubits, const Eigen::VectorXd& values,
                                 const Eigen::MatrixXcd& vectors,
                                 const std::vector<std::uint64_t>& embedding) {
  GroundSolution g;
  g.n_qubits = n_qubits;
  g.energy = values(0);
  const std::size_t dim = std::size_t{1} << n_qubits;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    if (values(k) - g.energy > kDegeneracyTol) break;
    std::vector<Complex> v(dim, Complex(0.0));
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      v[embedding[static_cast<std::size_t>(r)]] = vectors(r, k);
    }
    g.basis.push_back(std::move(v));
  }
  return g;
}

void check_hermitian(const PauliSum& h) {
  if (simplify(adjoint(h) - h).one_norm() > 1e-10) {
    throw std::invalid_argument("operator is not Hermitian");
  }
}

}  // namespace

std::vector<double> spectrum(const PauliSum& h) {
  check_hermitian(h);
  const auto m = to_dense_matrix(h);
  std::vector<double> out;
  if (is_real(m)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(),
                                                          Eigen::EigenvaluesOnly);
    out.assign(solver.eigenvalues().data(),
               solver.eigenvalues().data() + solver.eigenvalues().size());
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m, Eigen::EigenvaluesOnly);
    out.assign(solver.eigenvalues().data(),
               solver.eigenvalues().data() + solver.eigenvalues().size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroundSolution exact_ground(const PauliSum& h) {
  check_hermitian(h);
  const auto m = to_dense_matrix(h);
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  hermitian_eigen(m, values, vectors);
  std::vector<std::uint64_t> embedding(static_cast<std::size_t>(m.rows()));
  for (std::size_t i = 0; i < embedding.size(); ++i) embedding[i] = i;
  return ground_from_eigen(h.n_qubits(), values, vectors, embedding);
}

GroundSolution sector_ground(const PauliSum& h, int k) {
  const int n = h.n_qubits();
  if (k < 0 || k > n) {
    throw std::invalid_argument("particle count " + std::to_string(k) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
  }
  if (n > kMaxDenseQubits) {
    throw std::length_error("refusing sector diagonalization on " +
                            std::to_string(n) + " qubits");
  }
  check_hermitian(h);
  const double comm = commutator(h, total_number_operator(n)).one_norm();
  if (comm >= kCommutatorTol) {
    throw std::invalid_argument(
        "Hamiltonian does not conserve particle number (commutator norm " +
        std::to_string(comm) + ")");
  }

  std::vector<std::uint64_t> states;
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::int64_t> position(dim, -1);
  for (std::uint64_t c = 0; c < dim; ++c) {
    if (std::popcount(c) == k) {
      position[c] = static_cast<std::int64_t>(states.size());
      states.push_back(c);
    }
  }
  const auto sdim = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sdim, sdim);
  for (const auto& t : h.terms()) {
    for (Eigen::Index col = 0; col < sdim; ++col) {
      const std::uint64_t c = states[static_cast<std::size_t>(col)];
      const auto row = position[c ^ t.x_mask()];
      if (row >= 0) m(row, col) += t.phase_on(c);
    }
  }
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
  hermitian_eigen(m, values, vectors);
  return ground_from_eigen(n, values, vectors, states);
}

double exact_correlation(const GroundSolution& ground, int m) {
  if (ground.basis.empty()) {
    throw std::invalid_argument("ground solution has an empty basis");
  }
  double n0 = 0.0, nm = 0.0, n0m = 0.0;
  for (const auto& v : ground.basis) {
    const StateVector s(v);
    n0 += density(s, 0);
    nm += density(s, m);
    n0m += pair_density(s, 0, m);
  }
  const double d = ground.degeneracy();
  n0 /= d;
  nm /= d;
  n0m /= d;
  return n0m - n0 * nm;
}

double correlation(const StateVector& state, int m) {
  return pair_density(state, 0, m) - density(state, 0) * density(state, m);
}

double infidelity(const StateVector& state, const GroundSolution& ground) {
  if (ground.n_qubits != state.n_qubits()) {
    throw std::invalid_argument("state and ground solution sizes differ");
  }
  double overlap = 0.0;
  for (const auto& v : ground.basis) {
    overlap += overlap_squared(v, state.amplitudes());
  }
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

}  // namespace vqelab
