// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <vector>

#include "vqelab/pauli.hpp"

namespace vqelab {

/// One creation (dagger = true) or annihilation operator on a mode.
struct LadderFactor {
  int mode = 0;
  bool dagger = false;

  friend bool operator==(const LadderFactor&, const LadderFactor&) = default;
};

/// Ordered product of ladder operators; order is significant.
struct FermionTerm {
  Complex coeff = 1.0;
  std::vector<LadderFactor> factors;
};

/**
 * @brief A weighted sum of products of fermionic ladder operators.
 *
 * Terms are stored as given; no normal ordering is applied, so the qubit
 * image of each term is the ordered product of the factor images.
 */
class FermionOperator {
 public:
  explicit FermionOperator(int n_modes);

  int n_modes() const { return n_modes_; }
  const std::vector<FermionTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  void add_term(Complex coeff, std::vector<LadderFactor> factors);

  static FermionOperator creation(int n_modes, int mode);
  static FermionOperator annihilation(int n_modes, int mode);
  /// c†_j c_j
  static FermionOperator number(int n_modes, int mode);

 private:
  int n_modes_ = 0;
  std::vector<FermionTerm> terms_;
};

/// Occupied mode is qubit |1>: c†_j -> Z_0 ... Z_{j-1} (X_j - i Y_j) / 2.
PauliSum jordan_wigner(const FermionOperator& op);

/// Index sets of the Fenwick-tree Bravyi-Kitaev encoding for one mode.
struct BkIndexSets {
  std::vector<int> update;  ///< ancestors of j: qubits whose value flips with n_j
  std::vector<int> parity;  ///< qubits whose parities sum to the occupation of modes < j
  std::vector<int> flip;    ///< children of j: qubit j xor these gives n_j
};

/**
 * Sets for mode j on a Fenwick tree over n modes. Node i stores the parity
 * of the contiguous block of modes ending at i; the root is n - 1 and each
 * block [lo, hi] with root hi is split at (lo + hi) / 2.
 */
BkIndexSets bk_index_sets(int j, int n);

/// Fenwick-tree Bravyi-Kitaev encoding (no padding to a power of two).
PauliSum bravyi_kitaev(const FermionOperator& op);

/// Image of a single ladder operator under each mapping.
PauliSum jordan_wigner_ladder(int n_modes, int mode, bool dagger);
PauliSum bravyi_kitaev_ladder(int n_modes, int mode, bool dagger);

}  // namespace vqelab
