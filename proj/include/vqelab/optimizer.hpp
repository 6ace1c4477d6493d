// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "vqelab/ansatz.hpp"
#include "vqelab/pauli.hpp"

namespace vqelab {

using Objective = std::function<double(std::span<const double>)>;
/// Gradient at theta; the second argument is f(theta), already evaluated by
/// the caller, which finite-difference gradients reuse.
using GradientFn =
    std::function<std::vector<double>(std::span<const double>, double)>;

struct OptimizerOptions {
  double fd_step = 1e-6;
  double gradient_tolerance = 1e-8;
  /// Relative decrease of f per iteration below which the run stops.
  double function_tolerance = 1e-14;
  int max_iterations = 1000;
  int lbfgs_memory = 10;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

enum class Termination {
  GradientTolerance,
  FunctionTolerance,
  MaxIterations,
  LineSearchFailure,
};

std::string_view to_string(Termination t);

struct MinimizeResult {
  std::vector<double> theta;
  double value = 0.0;
  double initial_value = 0.0;
  int iterations = 0;
  int function_calls = 0;
  int gradient_calls = 0;
  Termination termination = Termination::MaxIterations;
};

/**
 * Forward differences, component k = (f(theta + delta e_k) - f(theta)) / delta.
 * Makes exactly p + 1 calls to f. A non-finite value throws std::domain_error
 * naming the component (-1 for the base point).
 */
std::vector<double> forward_diff_gradient(const Objective& f,
                                          std::span<const double> theta,
                                          double delta);

/// As above, reusing an already known f(theta); makes p calls.
std::vector<double> forward_diff_gradient(const Objective& f,
                                          std::span<const double> theta,
                                          double f_theta, double delta);

/**
 * Limited-memory BFGS with a line search enforcing the strong Wolfe
 * conditions. Never returns a point worse than theta0; a failed line search
 * ends the run with Termination::LineSearchFailure and the best point found.
 */
MinimizeResult lbfgs_minimize(const Objective& f, const GradientFn& gradient,
                              std::span<const double> theta0,
                              const OptimizerOptions& opts);

/// Mixes a list of integers into one 64-bit seed (via std::seed_seq).
std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts);

/// I.i.d. normal draws with mean 0 and variance 0.1.
std::vector<double> gaussian_init(int count, std::uint64_t seed);

inline constexpr double kInitVariance = 0.1;

/// One row per ansatz depth of a layerwise run.
struct LayerRecord {
  int layers = 0;
  std::vector<double> initial_theta;
  std::vector<double> theta;
  double energy = 0.0;
  int iterations = 0;
  int gradient_calls = 0;
  Termination termination = Termination::MaxIterations;
};

struct LayerwiseResult {
  std::vector<LayerRecord> layers;
};

struct LayerwiseProblem {
  PauliSum hamiltonian;
  GateFamily family = GateFamily::Match;
  std::vector<int> initial_occupations;
};

/// Energy of the ansatz state at theta.
double vqe_energy(const PauliSum& hamiltonian, const AnsatzSpec& spec,
                  std::span<const double> theta,
                  std::span<const int> initial_occupations);

/**
 * Grows the checkerboard ansatz from 1 to max_layers layers. Depth 1 starts
 * from Gaussian parameters; depth k + 1 keeps the depth-k optimum for the
 * first k layers and draws the new layer from the same distribution. The
 * draws for depth L use a stream derived from (seed, L).
 */
LayerwiseResult layerwise_optimize(const LayerwiseProblem& problem,
                                   int max_layers, std::uint64_t seed,
                                   const OptimizerOptions& opts);

}  // namespace vqelab
