// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace vqelab {

using Complex = std::complex<double>;

/// Largest register a Pauli string can describe (one bit per qubit per mask).
inline constexpr int kMaxPauliQubits = 64;

/// Largest register for which dense matrices are materialized.
inline constexpr int kMaxDenseQubits = 14;

/// Default magnitude below which coefficients are dropped by simplify().
inline constexpr double kDefaultDropTol = 1e-12;

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliAxis axis);
PauliAxis pauli_axis_from_char(char c);

/**
 * @brief A weighted tensor product of single-qubit Pauli operators.
 *
 * Qubit j corresponds to bit j of a computational-basis index (qubit 0 is
 * the lowest-order bit). Internally the string is kept in symplectic form:
 * bit j of x_mask / z_mask is set when the axis on qubit j has an X / Z
 * component, so Y sets both. The operator acts on a basis state as
 *
 *   P |c> = coeff * i^{popcount(x & z)} * (-1)^{popcount(c & z)} |c ^ x>.
 */
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits with the given coefficient.
  explicit PauliString(int n_qubits, Complex coeff = 1.0);

  /// From explicit axes; axes.size() is the qubit count.
  PauliString(const std::vector<PauliAxis>& axes, Complex coeff = 1.0);

  /// From a label such as "XIZY", qubit 0 leftmost.
  PauliString(std::string_view label, Complex coeff = 1.0);

  /// Single non-identity axis at one qubit.
  static PauliString single(int n_qubits, int qubit, PauliAxis axis,
                            Complex coeff = 1.0);

  int n_qubits() const { return n_qubits_; }
  Complex coeff() const { return coeff_; }
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }

  PauliAxis axis(int qubit) const;
  std::vector<PauliAxis> axes() const;

  /// Number of non-identity axes.
  int weight() const;

  /// Axis characters, qubit 0 leftmost.
  std::string label() const;

  PauliString with_coeff(Complex c) const;

  /// Same axes, ignoring coefficients.
  bool same_axes(const PauliString& other) const {
    return n_qubits_ == other.n_qubits_ && x_mask_ == other.x_mask_ &&
           z_mask_ == other.z_mask_;
  }

  /// Phase (including the coefficient) acquired on basis state c; the
  /// image basis state is c ^ x_mask().
  Complex phase_on(std::uint64_t basis_index) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_qubits_ = 0;
  Complex coeff_ = 1.0;
  std::uint64_t x_mask_ = 0;
  std::uint64_t z_mask_ = 0;
};

/// Operator product a·b with the phase folded into the coefficient.
PauliString multiply(const PauliString& a, const PauliString& b);

/**
 * @brief A weighted sum of Pauli strings in canonical form.
 *
 * Terms are kept sorted by (x_mask, z_mask) with no repeated axes, which
 * makes iteration order, printing, and equality deterministic.
 */
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(int n_qubits);
  PauliSum(int n_qubits, const std::vector<PauliString>& terms);

  static PauliSum identity(int n_qubits, Complex coeff = 1.0);

  int n_qubits() const { return n_qubits_; }
  const std::vector<PauliString>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds a term, merging with an existing term of the same axes. Merged
  /// terms are not dropped even if they cancel; call simplify() for that.
  void add(const PauliString& term);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  /// True when every coefficient has |imag| <= tol.
  bool has_real_coefficients(double tol = kDefaultDropTol) const;

  /// Sum of |coeff| over terms; an upper bound on the operator norm.
  double one_norm() const;

  /// Largest number of non-identity axes over all terms.
  int max_weight() const;

  /// One term per line, each `(re,im) * "AXES"`. Round-trips via parse().
  std::string to_string() const;
  static PauliSum parse(std::string_view text);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  int n_qubits_ = 0;
  std::vector<PauliString> terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(Complex scale, PauliSum a);

/// Canonical product of two sums.
PauliSum sum_multiply(const PauliSum& a, const PauliSum& b);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

/// Merges duplicate axes and removes terms with |coeff| < drop_tol.
PauliSum simplify(const PauliSum& a, double drop_tol = kDefaultDropTol);

/// Hermitian conjugate of a sum.
PauliSum adjoint(const PauliSum& a);

/// Commutator [a, b] = ab - ba, simplified.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

/// Dense 2^n x 2^n matrix; element (r, c) is <r|a|c>. Refuses n > 14.
Eigen::MatrixXcd to_dense_matrix(const PauliSum& a);
Eigen::MatrixXcd to_dense_matrix(const PauliString& s);

/// Textual form of one string: `(re,im) * "AXES"`.
std::string to_string(const PauliString& s);
PauliString parse_pauli_string(std::string_view text);

}  // namespace vqelab
