// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/models.hpp"

#include <stdexcept>
#include <string>

namespace vqelab {

namespace {

void check_chain(int n_sites, bool periodic) {
  if (n_sites <= 0) {
    throw std::invalid_argument("n_sites must be positive");
  }
  if (periodic && n_sites < 3) {
    throw std::invalid_argument(
        "periodic chains need at least 3 sites, got " + std::to_string(n_sites));
  }
}

// Bonds (i, i + offset) with wrap when periodic.
template <typename Fn>
void for_each_bond(int n, int offset, bool periodic, Fn&& fn) {
  for (int i = 0; i < n; ++i) {
    const int j = i + offset;
    if (j < n) {
      fn(i, j);
    } else if (periodic) {
      fn(i, j % n);
    }
  }
}

}  // namespace

FermionMapping parse_fermion_mapping(std::string_view name) {
  if (name == "jw") return FermionMapping::JordanWigner;
  if (name == "bk") return FermionMapping::BravyiKitaev;
  throw std::invalid_argument("unknown fermion mapping '" + std::string(name) +
                              "' (expected jw or bk)");
}

std::string_view to_string(FermionMapping m) {
  return m == FermionMapping::JordanWigner ? "jw" : "bk";
}

FermionOperator build_hubbard_nnn(const HubbardNnnParams& p) {
  check_chain(p.n_sites, p.periodic);
  FermionOperator op(p.n_sites);
  if (p.t != 0.0) {
    for_each_bond(p.n_sites, 1, p.periodic, [&](int i, int j) {
      op.add_term(-p.t, {{i, true}, {j, false}});
      op.add_term(-p.t, {{j, true}, {i, false}});
    });
  }
  if (p.v1 != 0.0) {
    for_each_bond(p.n_sites, 1, p.periodic, [&](int i, int j) {
      op.add_term(p.v1, {{i, true}, {i, false}, {j, true}, {j, false}});
    });
  }
  if (p.v2 != 0.0) {
    for_each_bond(p.n_sites, 2, p.periodic, [&](int i, int j) {
      op.add_term(p.v2, {{i, true}, {i, false}, {j, true}, {j, false}});
    });
  }
  return op;
}

PauliSum build_tfim(const TfimParams& p) {
  check_chain(p.n_sites, p.periodic);
  PauliSum h(p.n_sites);
  for_each_bond(p.n_sites, 1, p.periodic, [&](int i, int j) {
    std::vector<PauliAxis> axes(static_cast<std::size_t>(p.n_sites),
                                PauliAxis::I);
    axes[static_cast<std::size_t>(i)] = PauliAxis::Z;
    axes[static_cast<std::size_t>(j)] = PauliAxis::Z;
    h.add(PauliString(axes, 1.0));
  });
  if (p.h != 0.0) {
    for (int i = 0; i < p.n_sites; ++i) {
      h.add(PauliString::single(p.n_sites, i, PauliAxis::X, p.h));
    }
  }
  return simplify(h);
}

PauliSum to_qubit_hamiltonian(const FermionOperator& model,
                              FermionMapping mapping) {
  const PauliSum image = mapping == FermionMapping::JordanWigner
                             ? jordan_wigner(model)
                             : bravyi_kitaev(model);
  if (!image.has_real_coefficients(1e-10)) {
    throw std::invalid_argument(
        "qubit image has complex coefficients; the fermionic operator is not "
        "Hermitian");
  }
  PauliSum real_image(image.n_qubits());
  for (const auto& t : image.terms()) {
    real_image.add(t.with_coeff(t.coeff().real()));
  }
  return simplify(real_image);
}

PauliSum total_number_operator(int n_qubits) {
  PauliSum n(n_qubits);
  for (int j = 0; j < n_qubits; ++j) {
    n.add(PauliString(n_qubits, 0.5));
    n.add(PauliString::single(n_qubits, j, PauliAxis::Z, -0.5));
  }
  return simplify(n);
}

}  // namespace vqelab
