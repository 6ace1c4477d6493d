// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/fermion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>
#include <stdexcept>
#include <string>

namespace vqelab {

namespace {

void check_mode(int mode, int n_modes) {
  if (mode < 0 || mode >= n_modes) {
    throw std::out_of_range("fermion mode " + std::to_string(mode) +
                            " out of range for " + std::to_string(n_modes) +
                            " modes");
  }
}

// Parent links of the Fenwick tree on n nodes; the root has parent -1.
std::vector<int> fenwick_parents(int n) {
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::function<void(int, int, int)> build = [&](int left, int right,
                                                 int par) {
    if (left >= right) return;
    const int pivot = (left + right) >> 1;
    parent[static_cast<std::size_t>(pivot)] = par;
    build(left, pivot, pivot);
    build(pivot + 1, right, par);
  };
  build(0, n - 1, n - 1);
  return parent;
}

PauliString bk_majorana(int n, int mode, PauliAxis axis,
                        const std::vector<int>& z_set,
                        const std::vector<int>& x_set, Complex coeff) {
  std::vector<PauliAxis> axes(static_cast<std::size_t>(n), PauliAxis::I);
  axes[static_cast<std::size_t>(mode)] = axis;
  for (int q : z_set) axes[static_cast<std::size_t>(q)] = PauliAxis::Z;
  for (int q : x_set) axes[static_cast<std::size_t>(q)] = PauliAxis::X;
  return PauliString(axes, coeff);
}

template <typename LadderImage>
PauliSum map_operator(const FermionOperator& op, LadderImage ladder) {
  const int n = op.n_modes();
  PauliSum out(n);
  for (const auto& term : op.terms()) {
    PauliSum product = PauliSum::identity(n, term.coeff);
    for (const auto& f : term.factors) {
      product = sum_multiply(product, ladder(n, f.mode, f.dagger));
    }
    out += product;
  }
  return simplify(out);
}

}  // namespace

FermionOperator::FermionOperator(int n_modes) : n_modes_(n_modes) {
  if (n_modes <= 0 || n_modes > kMaxPauliQubits) {
    throw std::invalid_argument("fermion mode count must be in [1, " +
                                std::to_string(kMaxPauliQubits) + "]");
  }
}

void FermionOperator::add_term(Complex coeff, std::vector<LadderFactor> factors) {
  if (!std::isfinite(coeff.real()) || !std::isfinite(coeff.imag())) {
    throw std::invalid_argument("fermion term coefficient must be finite");
  }
  for (const auto& f : factors) check_mode(f.mode, n_modes_);
  terms_.push_back({coeff, std::move(factors)});
}

FermionOperator FermionOperator::creation(int n_modes, int mode) {
  FermionOperator op(n_modes);
  op.add_term(1.0, {{mode, true}});
  return op;
}

FermionOperator FermionOperator::annihilation(int n_modes, int mode) {
  FermionOperator op(n_modes);
  op.add_term(1.0, {{mode, false}});
  return op;
}

FermionOperator FermionOperator::number(int n_modes, int mode) {
  FermionOperator op(n_modes);
  op.add_term(1.0, {{mode, true}, {mode, false}});
  return op;
}

PauliSum jordan_wigner_ladder(int n_modes, int mode, bool dagger) {
  check_mode(mode, n_modes);
  std::vector<PauliAxis> axes(static_cast<std::size_t>(n_modes), PauliAxis::I);
  for (int q = 0; q < mode; ++q) axes[static_cast<std::size_t>(q)] = PauliAxis::Z;
  axes[static_cast<std::size_t>(mode)] = PauliAxis::X;
  PauliString x_part(axes, 0.5);
  axes[static_cast<std::size_t>(mode)] = PauliAxis::Y;
  // |1><0| = (X - iY)/2 raises the vacuum |0> to the occupied |1>.
  PauliString y_part(axes, Complex(0.0, dagger ? -0.5 : 0.5));
  return PauliSum(n_modes, {x_part, y_part});
}

PauliSum jordan_wigner(const FermionOperator& op) {
  return map_operator(op, jordan_wigner_ladder);
}

BkIndexSets bk_index_sets(int j, int n) {
  if (n <= 0) throw std::invalid_argument("mode count must be positive");
  check_mode(j, n);
  const auto parent = fenwick_parents(n);

  BkIndexSets sets;
  for (int a = parent[static_cast<std::size_t>(j)]; a >= 0;
       a = parent[static_cast<std::size_t>(a)]) {
    sets.update.push_back(a);
  }
  for (int c = 0; c < n; ++c) {
    const int p = parent[static_cast<std::size_t>(c)];
    if (p == j) {
      sets.flip.push_back(c);
      sets.parity.push_back(c);
    } else if (c < j && p >= 0 &&
               std::find(sets.update.begin(), sets.update.end(), p) !=
                   sets.update.end()) {
      sets.parity.push_back(c);
    }
  }
  std::sort(sets.update.begin(), sets.update.end());
  std::sort(sets.parity.begin(), sets.parity.end());
  return sets;
}

PauliSum bravyi_kitaev_ladder(int n_modes, int mode, bool dagger) {
  const auto sets = bk_index_sets(mode, n_modes);
  std::vector<int> remainder;
  std::set_difference(sets.parity.begin(), sets.parity.end(), sets.flip.begin(),
                      sets.flip.end(), std::back_inserter(remainder));
  // c†_j = (c_maj - i d_maj) / 2 with c_maj = X_U X_j Z_P, d_maj = X_U Y_j Z_R.
  const auto c_maj =
      bk_majorana(n_modes, mode, PauliAxis::X, sets.parity, sets.update, 0.5);
  const auto d_maj = bk_majorana(n_modes, mode, PauliAxis::Y, remainder,
                                 sets.update, Complex(0.0, dagger ? -0.5 : 0.5));
  return PauliSum(n_modes, {c_maj, d_maj});
}

PauliSum bravyi_kitaev(const FermionOperator& op) {
  return map_operator(op, bravyi_kitaev_ladder);
}

}  // namespace vqelab
