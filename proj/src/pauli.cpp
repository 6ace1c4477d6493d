// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace vqelab {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_finite(Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
    throw std::invalid_argument("Pauli coefficient must be finite");
  }
}

void check_qubit_count(int n) {
  if (n < 0 || n > kMaxPauliQubits) {
    throw std::invalid_argument("Pauli string qubit count must be in [0, " +
                                std::to_string(kMaxPauliQubits) + "], got " +
                                std::to_string(n));
  }
}

auto key_of(const PauliString& s) {
  return std::make_pair(s.x_mask(), s.z_mask());
}

bool key_less(const PauliString& a, const PauliString& b) {
  return key_of(a) < key_of(b);
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view s) {
  s = trim(s);
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number in Pauli text: '" +
                                std::string(s) + "'");
  }
  return value;
}

}  // namespace

char to_char(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::I:
      return 'I';
    case PauliAxis::X:
      return 'X';
    case PauliAxis::Y:
      return 'Y';
    case PauliAxis::Z:
      return 'Z';
  }
  return '?';
}

PauliAxis pauli_axis_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliAxis::I;
    case 'X':
      return PauliAxis::X;
    case 'Y':
      return PauliAxis::Y;
    case 'Z':
      return PauliAxis::Z;
    default:
      throw std::invalid_argument(std::string("unknown Pauli axis '") + c +
                                  "'");
  }
}

// ---------------------------------------------------------------------------
// PauliString

PauliString::PauliString(int n_qubits, Complex coeff)
    : n_qubits_(n_qubits), coeff_(coeff) {
  check_qubit_count(n_qubits);
  check_finite(coeff);
}

PauliString::PauliString(const std::vector<PauliAxis>& axes, Complex coeff)
    : PauliString(static_cast<int>(axes.size()), coeff) {
  for (int q = 0; q < n_qubits_; ++q) {
    const auto a = axes[static_cast<std::size_t>(q)];
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (a == PauliAxis::X || a == PauliAxis::Y) x_mask_ |= bit;
    if (a == PauliAxis::Z || a == PauliAxis::Y) z_mask_ |= bit;
  }
}

PauliString::PauliString(std::string_view label, Complex coeff)
    : PauliString(static_cast<int>(label.size()), coeff) {
  for (int q = 0; q < n_qubits_; ++q) {
    const auto a = pauli_axis_from_char(label[static_cast<std::size_t>(q)]);
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (a == PauliAxis::X || a == PauliAxis::Y) x_mask_ |= bit;
    if (a == PauliAxis::Z || a == PauliAxis::Y) z_mask_ |= bit;
  }
}

PauliString PauliString::single(int n_qubits, int qubit, PauliAxis axis,
                                Complex coeff) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " out of range for " + std::to_string(n_qubits) +
                            " qubits");
  }
  std::vector<PauliAxis> axes(static_cast<std::size_t>(n_qubits), PauliAxis::I);
  axes[static_cast<std::size_t>(qubit)] = axis;
  return PauliString(axes, coeff);
}

PauliAxis PauliString::axis(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::out_of_range("qubit index out of range");
  }
  const bool x = (x_mask_ >> qubit) & 1U;
  const bool z = (z_mask_ >> qubit) & 1U;
  if (x && z) return PauliAxis::Y;
  if (x) return PauliAxis::X;
  if (z) return PauliAxis::Z;
  return PauliAxis::I;
}

std::vector<PauliAxis> PauliString::axes() const {
  std::vector<PauliAxis> out;
  out.reserve(static_cast<std::size_t>(n_qubits_));
  for (int q = 0; q < n_qubits_; ++q) out.push_back(axis(q));
  return out;
}

int PauliString::weight() const { return std::popcount(x_mask_ | z_mask_); }

std::string PauliString::label() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_qubits_));
  for (int q = 0; q < n_qubits_; ++q) s.push_back(to_char(axis(q)));
  return s;
}

PauliString PauliString::with_coeff(Complex c) const {
  check_finite(c);
  PauliString out = *this;
  out.coeff_ = c;
  return out;
}

Complex PauliString::phase_on(std::uint64_t basis_index) const {
  const int y_count = std::popcount(x_mask_ & z_mask_);
  const int sign_count = std::popcount(basis_index & z_mask_);
  const Complex phase = kIPowers[(y_count + 2 * sign_count) & 3];
  return coeff_ * phase;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("Pauli string length mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
  // Per qubit P = i^{xz} X^x Z^z; Z^{z1} X^{x2} = (-1)^{z1 x2} X^{x2} Z^{z1}.
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int exponent = std::popcount(a.x_mask() & a.z_mask()) +
                       std::popcount(b.x_mask() & b.z_mask()) +
                       2 * std::popcount(a.z_mask() & b.x_mask()) -
                       std::popcount(x & z);
  const Complex phase = kIPowers[((exponent % 4) + 4) % 4];

  std::vector<PauliAxis> axes(static_cast<std::size_t>(a.n_qubits()));
  for (int q = 0; q < a.n_qubits(); ++q) {
    const bool xb = (x >> q) & 1U;
    const bool zb = (z >> q) & 1U;
    axes[static_cast<std::size_t>(q)] =
        xb ? (zb ? PauliAxis::Y : PauliAxis::X)
           : (zb ? PauliAxis::Z : PauliAxis::I);
  }
  return PauliString(axes, a.coeff() * b.coeff() * phase);
}

std::string to_string(const PauliString& s) {
  return "(" + format_double(s.coeff().real()) + "," +
         format_double(s.coeff().imag()) + ") * \"" + s.label() + "\"";
}

PauliString parse_pauli_string(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  const auto comma = text.find(',', open);
  const auto close = text.find(')', comma);
  const auto star = text.find('*', close);
  const auto q1 = text.find('"', star);
  const auto q2 = text.find('"', q1 == std::string_view::npos ? q1 : q1 + 1);
  if (open != 0 || comma == std::string_view::npos ||
      close == std::string_view::npos || star == std::string_view::npos ||
      q1 == std::string_view::npos || q2 == std::string_view::npos ||
      !trim(text.substr(q2 + 1)).empty()) {
    throw std::invalid_argument("malformed Pauli term: '" + std::string(text) +
                                "'");
  }
  const double re = parse_double(text.substr(1, comma - 1));
  const double im = parse_double(text.substr(comma + 1, close - comma - 1));
  return PauliString(text.substr(q1 + 1, q2 - q1 - 1), Complex(re, im));
}

// ---------------------------------------------------------------------------
// PauliSum

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits <= 0 || n_qubits > kMaxPauliQubits) {
    throw std::invalid_argument("PauliSum qubit count must be in [1, " +
                                std::to_string(kMaxPauliQubits) + "]");
  }
}

PauliSum::PauliSum(int n_qubits, const std::vector<PauliString>& terms)
    : PauliSum(n_qubits) {
  for (const auto& t : terms) add(t);
}

PauliSum PauliSum::identity(int n_qubits, Complex coeff) {
  PauliSum s(n_qubits);
  s.add(PauliString(n_qubits, coeff));
  return s;
}

void PauliSum::add(const PauliString& term) {
  if (term.n_qubits() != n_qubits_) {
    throw std::invalid_argument("term has " + std::to_string(term.n_qubits()) +
                                " qubits, sum has " +
                                std::to_string(n_qubits_));
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term, key_less);
  if (it != terms_.end() && it->same_axes(term)) {
    *it = it->with_coeff(it->coeff() + term.coeff());
  } else {
    terms_.insert(it, term);
  }
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  for (const auto& t : other.terms_) add(t.with_coeff(-t.coeff()));
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& t : terms_) t = t.with_coeff(t.coeff() * scale);
  return *this;
}

bool PauliSum::has_real_coefficients(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const auto& t) {
    return std::abs(t.coeff().imag()) <= tol;
  });
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff());
  return s;
}

int PauliSum::max_weight() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.weight());
  return w;
}

std::string PauliSum::to_string() const {
  std::string out;
  for (const auto& t : terms_) {
    out += vqelab::to_string(t);
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::parse(std::string_view text) {
  std::vector<PauliString> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty()) terms.push_back(parse_pauli_string(line));
    pos = end + 1;
  }
  if (terms.empty()) {
    throw std::invalid_argument(
        "cannot infer qubit count from an empty Pauli sum text");
  }
  return PauliSum(terms.front().n_qubits(), terms);
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(Complex scale, PauliSum a) { return a *= scale; }

PauliSum sum_multiply(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw std::invalid_argument("PauliSum qubit-count mismatch: " +
                                std::to_string(a.n_qubits()) + " vs " +
                                std::to_string(b.n_qubits()));
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, PauliString> acc;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto p = multiply(ta, tb);
      auto [it, inserted] = acc.try_emplace(key_of(p), p);
      if (!inserted) it->second = p.with_coeff(it->second.coeff() + p.coeff());
    }
  }
  std::vector<PauliString> terms;
  terms.reserve(acc.size());
  for (auto& [k, v] : acc) terms.push_back(std::move(v));
  return simplify(PauliSum(a.n_qubits(), terms));
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  return sum_multiply(a, b);
}

PauliSum simplify(const PauliSum& a, double drop_tol) {
  if (!(drop_tol >= 0.0)) {
    throw std::invalid_argument("drop tolerance must be non-negative");
  }
  PauliSum out(a.n_qubits());
  for (const auto& t : a.terms()) {
    if (std::abs(t.coeff()) >= drop_tol && std::abs(t.coeff()) > 0.0) {
      out.add(t);
    }
  }
  return out;
}

PauliSum adjoint(const PauliSum& a) {
  PauliSum out(a.n_qubits());
  for (const auto& t : a.terms()) out.add(t.with_coeff(std::conj(t.coeff())));
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return simplify(sum_multiply(a, b) - sum_multiply(b, a));
}

Eigen::MatrixXcd to_dense_matrix(const PauliSum& a) {
  if (a.n_qubits() > kMaxDenseQubits) {
    throw std::length_error("refusing to build a dense matrix on " +
                            std::to_string(a.n_qubits()) +
                            " qubits (limit " +
                            std::to_string(kMaxDenseQubits) + ")");
  }
  const std::uint64_t dim = std::uint64_t{1} << a.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& t : a.terms()) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(c ^ t.x_mask()),
        static_cast<Eigen::Index>(c)) += t.phase_on(c);
    }
  }
  return m;
}

Eigen::MatrixXcd to_dense_matrix(const PauliString& s) {
  return to_dense_matrix(PauliSum(s.n_qubits(), {s}));
}

}  // namespace vqelab
