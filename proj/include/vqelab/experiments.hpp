// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vqelab/config.hpp"
#include "vqelab/optimizer.hpp"
#include "vqelab/oracle.hpp"
#include "vqelab/pauli.hpp"

namespace vqelab {

/// Everything needed to run the VQE or the oracle for one system size.
struct VqeProblem {
  int n_qubits = 0;
  PauliSum hamiltonian;
  GateFamily family = GateFamily::Match;
  std::vector<int> initial_occupations;
  /// Sector ground state for number-conserving runs, full-space otherwise.
  GroundSolution exact;
};

/// Qubit Hamiltonian of the configured model on n sites.
PauliSum build_hamiltonian(const ExperimentConfig& cfg, int n_qubits);

VqeProblem make_problem(const ExperimentConfig& cfg, int n_qubits);

struct ConvergenceRecord {
  int n_qubits = 0;
  int layers = 0;
  double e_vqe = 0.0;
  double e_exact = 0.0;
  double abs_error = 0.0;
  double infidelity = 0.0;
  int iterations = 0;
  std::string status;
};

/// Layerwise VQE per system size; one record per reported depth.
std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& cfg);

struct CorrelationRecord {
  int n_qubits = 0;
  int layers = 0;
  int m = 0;
  double c_vqe = 0.0;
  double c_exact = 0.0;
};

struct CorrelationSummary {
  int n_qubits = 0;
  int layers = 0;
  double rel_error = 0.0;
  int degeneracy = 1;
};

struct CorrelationResult {
  std::vector<CorrelationRecord> records;
  std::vector<CorrelationSummary> summaries;
};

/// ||c_vqe - c_exact||_2 / ||c_exact||_2; throws when c_exact is zero.
double correlation_relative_error(std::span<const double> c_vqe,
                                  std::span<const double> c_exact);

/// C(m) on the VQE state and on the exact ground space for m in [0, n).
CorrelationResult run_correlation(const ExperimentConfig& cfg);

struct PlateauSample {
  int n_qubits = 0;
  int layers = 0;
  int sample = 0;
  std::vector<double> gradient;
  bool finite = true;
};

struct PlateauAggregate {
  int n_qubits = 0;
  int layers = 0;
  /// Unbiased variance pooled over all components of all finite samples.
  double variance = 0.0;
  int samples_used = 0;
  int samples_excluded = 0;
  /// Unbiased variance of each component across finite samples.
  std::vector<double> component_variance;
};

struct PlateauResult {
  std::vector<PlateauSample> samples;
  std::vector<PlateauAggregate> aggregates;
};

/// Uniform [0, 2 pi) parameters for one plateau sample; the stream is
/// derived from (seed, n, layers, sample) only.
std::vector<double> plateau_point(std::uint64_t seed, int n_qubits, int layers,
                                  int sample, int count);

/// Forward-difference gradients at N random points per (n, L).
PlateauResult run_plateau(const ExperimentConfig& cfg);

/// Textbook unbiased sample variance (divides by count - 1).
double unbiased_variance(std::span<const double> values);

/// Exact ground state of the configured model.
struct ExactDiagRecord {
  int n_qubits = 0;
  double energy = 0.0;
  int degeneracy = 0;
  std::string sector;  ///< "full" or the particle count
};

std::vector<ExactDiagRecord> run_exact(const ExperimentConfig& cfg,
                                       bool restrict_to_sector);

// CSV output with fixed headers.
void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergenceRecord>& rows);
void write_correlation_csv(std::ostream& os,
                           const std::vector<CorrelationRecord>& rows);
void write_correlation_summary_csv(std::ostream& os,
                                   const std::vector<CorrelationSummary>& rows);
void write_plateau_raw_csv(std::ostream& os,
                           const std::vector<PlateauSample>& rows);
void write_plateau_aggregate_csv(std::ostream& os,
                                 const std::vector<PlateauAggregate>& rows);
void write_plateau_components_csv(std::ostream& os,
                                  const std::vector<PlateauAggregate>& rows);

/// Sibling path: "out/run.csv" + "_summary" -> "out/run_summary.csv".
std::string sibling_path(const std::string& path, const std::string& suffix,
                         const std::string& extension);

}  // namespace vqelab
