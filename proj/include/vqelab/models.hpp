// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <string_view>

#include "vqelab/fermion.hpp"
#include "vqelab/pauli.hpp"

namespace vqelab {

/// Spinless fermions with nearest- and next-nearest-neighbor interactions.
struct HubbardNnnParams {
  int n_sites = 4;
  double t = 1.0;
  double v1 = 2.0;
  double v2 = 1.0;
  bool periodic = true;
};

/// Transverse-field Ising chain, sum Z_i Z_{i+1} + h sum X_i.
struct TfimParams {
  int n_sites = 4;
  double h = 1.0;
  bool periodic = true;
};

enum class FermionMapping { JordanWigner, BravyiKitaev };

FermionMapping parse_fermion_mapping(std::string_view name);
std::string_view to_string(FermionMapping m);

/**
 * -t sum_<i,j> (c†_i c_j + c†_j c_i) + V1 sum_i n_i n_{i+1} + V2 sum_i n_i n_{i+2}.
 *
 * With periodic boundaries both interaction sums wrap modulo n_sites. Terms
 * whose coupling is exactly zero are omitted. Throws when periodic and
 * n_sites < 3.
 */
FermionOperator build_hubbard_nnn(const HubbardNnnParams& p);

/// Built directly on qubits; throws when periodic and n_sites < 3.
PauliSum build_tfim(const TfimParams& p);

/// Encodes a fermionic Hamiltonian; the result has real coefficients.
PauliSum to_qubit_hamiltonian(const FermionOperator& model,
                              FermionMapping mapping);

/// sum_j (I - Z_j) / 2, the particle-number operator under Jordan-Wigner.
PauliSum total_number_operator(int n_qubits);

}  // namespace vqelab
