// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "test_support.hpp"
#include "vqelab/ansatz.hpp"
#include "vqelab/models.hpp"
#include "vqelab/oracle.hpp"
#include "vqelab/statevector.hpp"

using namespace vqelab;

namespace {

TwoQubitGate random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Matrix4cd a;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) a(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::Matrix4cd> qr(a);
  const Eigen::Matrix4cd q = qr.householderQ();
  TwoQubitGate::Matrix m{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = q(r, c);
  }
  return TwoQubitGate(m);
}

// Full-register matrix of a gate on (qa, qb), built index by index.
Eigen::MatrixXcd embed(const TwoQubitGate& g, int n, int qa, int qb) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    const int local_c = static_cast<int>(((c >> qa) & 1) | (((c >> qb) & 1) << 1));
    const Eigen::Index rest = c & ~((Eigen::Index{1} << qa) | (Eigen::Index{1} << qb));
    for (int local_r = 0; local_r < 4; ++local_r) {
      const Eigen::Index r = rest | (Eigen::Index(local_r & 1) << qa) |
                             (Eigen::Index(local_r >> 1) << qb);
      m(r, c) = g(local_r, local_c);
    }
  }
  return m;
}

double state_distance(const StateVector& a, const StateVector& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(BasisState, Examples) {
  const auto empty = basis_state(2, std::vector<int>{});
  EXPECT_EQ(empty[0], Complex(1.0));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(empty[i], Complex(0.0));

  EXPECT_EQ(basis_state(2, std::vector<int>{0, 1})[3], Complex(1.0));
  EXPECT_EQ(basis_state(3, std::vector<int>{1})[2], Complex(1.0));

  EXPECT_THROW(basis_state(3, std::vector<int>{3}), std::out_of_range);
  EXPECT_THROW(basis_state(3, std::vector<int>{1, 1}), std::invalid_argument);
}

TEST(StateVector, RejectsUnnormalizedAmplitudes) {
  EXPECT_THROW(StateVector(std::vector<Complex>{1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(StateVector(std::vector<Complex>{1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(TwoQubitGate, RejectsNonUnitary) {
  TwoQubitGate::Matrix m{};
  m[0][0] = 2.0;
  m[1][1] = m[2][2] = m[3][3] = 1.0;
  EXPECT_THROW(TwoQubitGate{m}, std::invalid_argument);
}

TEST(ApplyGate, Examples) {
  std::mt19937_64 rng(1);
  const auto psi = oracles::random_state(3, rng);
  EXPECT_EQ(state_distance(apply_two_qubit_gate(psi, TwoQubitGate::identity(), 0, 2), psi), 0.0);

  const auto zero = basis_state(2, std::vector<int>{});
  const auto kept = apply_two_qubit_gate(zero, match_gate(0.0, 0.7), 0, 1);
  EXPECT_LT(state_distance(kept, zero), 1e-15);

  const auto moved = apply_two_qubit_gate(basis_state(2, std::vector<int>{0}),
                                          match_gate(std::numbers::pi / 2, 0.0), 0, 1);
  EXPECT_NEAR(std::abs(moved[2]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(moved[1]), 0.0, 1e-15);

  StateVector s(3);
  EXPECT_THROW(s.apply(TwoQubitGate::identity(), 1, 1), std::invalid_argument);
  EXPECT_THROW(s.apply(TwoQubitGate::identity(), 0, 3), std::out_of_range);
}

TEST(ApplyGate, MatchesEmbeddedMatrix) {
  std::mt19937_64 rng(2);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      const int qa = pick(rng);
      int qb = pick(rng);
      while (qb == qa) qb = pick(rng);
      const auto g = random_unitary(rng);
      const auto psi = oracles::random_state(n, rng);
      const auto out = apply_two_qubit_gate(psi, g, qa, qb);
      const Eigen::VectorXcd expected = embed(g, n, qa, qb) * oracles::to_eigen(psi);
      EXPECT_LT((oracles::to_eigen(out) - expected).cwiseAbs().maxCoeff(), 1e-13);
    }
  }
}

TEST(ApplyGate, NormPreservationAndInverse) {
  std::mt19937_64 rng(3);
  auto psi = oracles::random_state(6, rng);
  const auto start = psi;
  std::vector<std::tuple<TwoQubitGate, int, int>> applied;
  std::uniform_int_distribution<int> pick(0, 5);
  for (int k = 0; k < 100; ++k) {
    const int qa = pick(rng);
    int qb = pick(rng);
    while (qb == qa) qb = pick(rng);
    auto g = random_unitary(rng);
    psi.apply(g, qa, qb);
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12 * (k + 1));
    applied.emplace_back(g, qa, qb);
  }
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-10);

  auto single = oracles::random_state(4, rng);
  const auto before = single;
  const auto g = random_unitary(rng);
  single.apply(g, 3, 1);
  single.apply(g.adjoint(), 3, 1);
  EXPECT_LT(state_distance(single, before), 1e-12);

  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    psi.apply(std::get<0>(*it).adjoint(), std::get<1>(*it), std::get<2>(*it));
  }
  EXPECT_LT(state_distance(psi, start), 1e-11);
}

TEST(Expectation, Examples) {
  std::mt19937_64 rng(4);
  const auto psi = oracles::random_state(3, rng);
  EXPECT_NEAR(expectation(psi, PauliSum::identity(3)), 1.0, 1e-12);
  EXPECT_EQ(expectation(StateVector(1), PauliSum(1, {PauliString("Z")})), 1.0);

  const auto h = build_tfim({3, 1.0, true});
  const auto g = exact_ground(h);
  const StateVector ground(g.basis.front());
  EXPECT_NEAR(expectation(ground, h), g.energy, 1e-10);

  EXPECT_THROW(expectation(psi, PauliSum::identity(2)), std::invalid_argument);
  EXPECT_THROW(expectation(psi, PauliSum(3, {PauliString("XII", Complex(0, 1))})),
               std::domain_error);
}

TEST(Expectation, AgreesWithDenseMatrix) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      const auto psi = oracles::random_state(n, rng);
      const auto obs = oracles::random_sum(n, 10, rng, true);
      const auto v = oracles::to_eigen(psi);
      const Complex dense = v.dot(oracles::kron_matrix(obs) * v);
      EXPECT_NEAR(expectation(psi, obs), dense.real(), 1e-10);
    }
  }
}

TEST(Expectation, LinearInObservable) {
  std::mt19937_64 rng(6);
  const auto psi = oracles::random_state(4, rng);
  const auto a = oracles::random_sum(4, 6, rng);
  const auto b = oracles::random_sum(4, 6, rng);
  const double alpha = 0.7, beta = -1.9;
  const auto combined = Complex(alpha) * a + Complex(beta) * b;
  EXPECT_NEAR(expectation(psi, combined),
              alpha * expectation(psi, a) + beta * expectation(psi, b), 1e-10);
}

TEST(EnergyVariance, Examples) {
  const auto h = build_tfim({4, 0.6, true});
  const auto g = exact_ground(h);
  EXPECT_NEAR(energy_variance(StateVector(g.basis.front()), h), 0.0, 1e-9);

  const double r = 1.0 / std::sqrt(2.0);
  const StateVector plus(std::vector<Complex>{r, r});
  EXPECT_NEAR(energy_variance(plus, PauliSum(1, {PauliString("Z")})), 1.0, 1e-12);
}

TEST(EnergyVariance, MatchesSquaredOperatorRoute) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = oracles::random_state(3, rng);
    const auto h = simplify(oracles::random_sum(3, 7, rng));
    const auto v = oracles::to_eigen(psi);
    const auto hm = oracles::kron_matrix(h);
    const double mean = v.dot(hm * v).real();
    const double dense = v.dot(hm * hm * v).real() - mean * mean;
    EXPECT_NEAR(energy_variance(psi, h), dense, 1e-10);
    // Symbolic H^2 through the Pauli algebra.
    EXPECT_NEAR(energy_variance(psi, h),
                expectation(psi, sum_multiply(h, h)) - mean * mean, 1e-10);
  }
}

TEST(Density, Examples) {
  const auto s = basis_state(3, std::vector<int>{0});
  EXPECT_EQ(density(s, 0), 1.0);
  EXPECT_EQ(density(s, 1), 0.0);

  std::mt19937_64 rng(8);
  const auto psi = oracles::random_state(4, rng);
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(pair_density(psi, j, j), density(psi, j), 1e-15);
    EXPECT_NEAR(density(psi, j),
                0.5 * (1.0 - expectation(psi, PauliSum(4, {PauliString::single(4, j, PauliAxis::Z)}))),
                1e-12);
    for (int k = 0; k < 4; ++k) {
      const double p = pair_density(psi, j, k);
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0);
    }
  }
  EXPECT_THROW(density(psi, 4), std::out_of_range);
  EXPECT_THROW(pair_density(psi, 0, -1), std::out_of_range);
}

TEST(Density, HalfFillingGroundStateSumsToParticleCount) {
  const auto h = to_qubit_hamiltonian(build_hubbard_nnn({6, 1.0, 2.0, 1.0, true}),
                                      FermionMapping::JordanWigner);
  const auto g = sector_ground(h, 3);
  for (const auto& v : g.basis) {
    const StateVector s(v);
    double total = 0.0;
    for (int j = 0; j < 6; ++j) total += density(s, j);
    EXPECT_NEAR(total, 3.0, 1e-9);
  }
}
