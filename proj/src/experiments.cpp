// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "vqelab/models.hpp"

namespace vqelab {

namespace {

std::vector<double> correlation_curve(const StateVector& state) {
  std::vector<double> c(static_cast<std::size_t>(state.n_qubits()));
  for (int m = 0; m < state.n_qubits(); ++m) {
    c[static_cast<std::size_t>(m)] = correlation(state, m);
  }
  return c;
}

std::vector<double> exact_curve(const GroundSolution& g) {
  std::vector<double> c(static_cast<std::size_t>(g.n_qubits));
  for (int m = 0; m < g.n_qubits; ++m) {
    c[static_cast<std::size_t>(m)] = exact_correlation(g, m);
  }
  return c;
}

OptimizerOptions optimizer_options(const ExperimentConfig& cfg) {
  OptimizerOptions opts;
  opts.fd_step = cfg.delta;
  return opts;
}

// Parameters and state at each reported depth of a layerwise run.
struct DepthState {
  int layers = 0;
  StateVector state;
  double energy = 0.0;
  int iterations = 0;
  std::string status;
};

std::vector<DepthState> layerwise_states(const ExperimentConfig& cfg,
                                         const VqeProblem& problem) {
  const auto reported = cfg.reported_layers();
  const int max_layers =
      reported.empty() ? 0 : *std::max_element(reported.begin(), reported.end());
  LayerwiseResult run;
  if (max_layers >= 1) {
    LayerwiseProblem lp{problem.hamiltonian, problem.family,
                        problem.initial_occupations};
    run = layerwise_optimize(
        lp, max_layers,
        derive_seed({cfg.seed, static_cast<std::uint64_t>(problem.n_qubits)}),
        optimizer_options(cfg));
  }
  std::vector<DepthState> out;
  for (int layers : reported) {
    if (layers == 0) {
      auto s = basis_state(problem.n_qubits, problem.initial_occupations);
      const double e = expectation(s, problem.hamiltonian);
      out.push_back({0, std::move(s), e, 0, "initial_state"});
      continue;
    }
    const auto& rec = run.layers[static_cast<std::size_t>(layers - 1)];
    const AnsatzSpec spec(problem.n_qubits, layers, problem.family);
    out.push_back({layers,
                   prepare_state(spec, rec.theta, problem.initial_occupations),
                   rec.energy, rec.iterations,
                   std::string(to_string(rec.termination))});
  }
  return out;
}

}  // namespace

PauliSum build_hamiltonian(const ExperimentConfig& cfg, int n_qubits) {
  if (cfg.model == ModelKind::Tfim) {
    return build_tfim({n_qubits, cfg.h, cfg.periodic});
  }
  const auto op = build_hubbard_nnn({n_qubits, cfg.t, cfg.v1, cfg.v2, cfg.periodic});
  const auto mapping = cfg.mapping == QubitMapping::BravyiKitaev
                           ? FermionMapping::BravyiKitaev
                           : FermionMapping::JordanWigner;
  PauliSum h = to_qubit_hamiltonian(op, mapping);
  // An all-zero model still needs a well-formed operator on n qubits.
  return h.empty() ? PauliSum(n_qubits) : h;
}

VqeProblem make_problem(const ExperimentConfig& cfg, int n_qubits) {
  VqeProblem p;
  p.n_qubits = n_qubits;
  p.hamiltonian = build_hamiltonian(cfg, n_qubits);
  p.family = cfg.family;
  if (cfg.number_conserving()) {
    const int k = cfg.particles(n_qubits);
    p.initial_occupations = alternating_occupations(n_qubits, k);
    p.exact = sector_ground(p.hamiltonian, k);
  } else {
    p.exact = exact_ground(p.hamiltonian);
  }
  return p;
}

std::vector<ConvergenceRecord> run_convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<ConvergenceRecord> rows;
  for (int n : cfg.qubits) {
    const auto problem = make_problem(cfg, n);
    for (const auto& d : layerwise_states(cfg, problem)) {
      ConvergenceRecord r;
      r.n_qubits = n;
      r.layers = d.layers;
      r.e_vqe = d.energy;
      r.e_exact = problem.exact.energy;
      r.abs_error = std::abs(d.energy - problem.exact.energy);
      r.infidelity = infidelity(d.state, problem.exact);
      r.iterations = d.iterations;
      r.status = d.status;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

double correlation_relative_error(std::span<const double> c_vqe,
                                  std::span<const double> c_exact) {
  if (c_vqe.size() != c_exact.size()) {
    throw std::invalid_argument("correlation curves have different lengths");
  }
  double diff = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < c_vqe.size(); ++i) {
    diff += (c_vqe[i] - c_exact[i]) * (c_vqe[i] - c_exact[i]);
    ref += c_exact[i] * c_exact[i];
  }
  if (ref == 0.0) {
    throw std::domain_error("exact correlation curve has zero norm");
  }
  return std::sqrt(diff / ref);
}

CorrelationResult run_correlation(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.number_conserving()) {
    throw ConfigError("correlation runs need model hubbard-nnn with mapping jw "
                      "and family match");
  }
  CorrelationResult out;
  for (int n : cfg.qubits) {
    const auto problem = make_problem(cfg, n);
    const auto c_exact = exact_curve(problem.exact);
    for (const auto& d : layerwise_states(cfg, problem)) {
      const auto c_vqe = correlation_curve(d.state);
      for (int m = 0; m < n; ++m) {
        out.records.push_back({n, d.layers, m, c_vqe[static_cast<std::size_t>(m)],
                               c_exact[static_cast<std::size_t>(m)]});
      }
      out.summaries.push_back({n, d.layers,
                               correlation_relative_error(c_vqe, c_exact),
                               problem.exact.degeneracy()});
    }
  }
  return out;
}

std::vector<double> plateau_point(std::uint64_t seed, int n_qubits, int layers,
                                  int sample, int count) {
  std::mt19937_64 rng(derive_seed({seed, static_cast<std::uint64_t>(n_qubits),
                                   static_cast<std::uint64_t>(layers),
                                   static_cast<std::uint64_t>(sample)}));
  std::uniform_real_distribution<double> uniform(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(static_cast<std::size_t>(count));
  for (double& v : theta) v = uniform(rng);
  return theta;
}

double unbiased_variance(std::span<const double> values) {
  if (values.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

PlateauResult run_plateau(const ExperimentConfig& cfg) {
  cfg.validate();
  struct Cell {
    int n;
    int layers;
    const PauliSum* hamiltonian;
    const std::vector<int>* occupations;
  };
  std::vector<PauliSum> hamiltonians;
  std::vector<std::vector<int>> occupations;
  hamiltonians.reserve(cfg.qubits.size());
  occupations.reserve(cfg.qubits.size());
  for (int n : cfg.qubits) {
    hamiltonians.push_back(build_hamiltonian(cfg, n));
    occupations.push_back(cfg.number_conserving()
                              ? alternating_occupations(n, cfg.particles(n))
                              : std::vector<int>{});
  }
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < cfg.qubits.size(); ++i) {
    for (int layers : cfg.reported_layers()) {
      cells.push_back({cfg.qubits[i], layers, &hamiltonians[i], &occupations[i]});
    }
  }

  PlateauResult out;
  out.samples.resize(cells.size() * static_cast<std::size_t>(cfg.samples));
  auto compute = [&](std::size_t task) {
    const auto& cell = cells[task / static_cast<std::size_t>(cfg.samples)];
    const int s = static_cast<int>(task % static_cast<std::size_t>(cfg.samples));
    const AnsatzSpec spec(cell.n, cell.layers, cfg.family);
    const auto theta = plateau_point(cfg.seed, cell.n, cell.layers, s,
                                     spec.parameter_count());
    const Objective energy = [&](std::span<const double> x) {
      return vqe_energy(*cell.hamiltonian, spec, x, *cell.occupations);
    };
    PlateauSample& sample = out.samples[task];
    sample.n_qubits = cell.n;
    sample.layers = cell.layers;
    sample.sample = s;
    try {
      sample.gradient = forward_diff_gradient(energy, theta, cfg.delta);
    } catch (const std::domain_error&) {
      sample.gradient.assign(theta.size(),
                             std::numeric_limits<double>::quiet_NaN());
    }
    sample.finite = std::all_of(sample.gradient.begin(), sample.gradient.end(),
                                [](double g) { return std::isfinite(g); });
  };

  const std::size_t tasks = out.samples.size();
  const int workers = std::max(1, std::min<int>(cfg.threads, static_cast<int>(tasks)));
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks; ++t) compute(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = next++; t < tasks; t = next++) compute(t);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
          next = tasks;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    PlateauAggregate agg;
    agg.n_qubits = cells[c].n;
    agg.layers = cells[c].layers;
    std::vector<double> pooled;
    std::vector<const PlateauSample*> used;
    for (int s = 0; s < cfg.samples; ++s) {
      const auto& sample =
          out.samples[c * static_cast<std::size_t>(cfg.samples) +
                      static_cast<std::size_t>(s)];
      if (!sample.finite) {
        ++agg.samples_excluded;
        continue;
      }
      used.push_back(&sample);
      pooled.insert(pooled.end(), sample.gradient.begin(), sample.gradient.end());
    }
    agg.samples_used = static_cast<int>(used.size());
    agg.variance = unbiased_variance(pooled);
    if (!used.empty()) {
      const std::size_t p = used.front()->gradient.size();
      std::vector<double> column(used.size());
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < used.size(); ++i) column[i] = used[i]->gradient[k];
        agg.component_variance.push_back(unbiased_variance(column));
      }
    }
    out.aggregates.push_back(std::move(agg));
  }
  return out;
}

std::vector<ExactDiagRecord> run_exact(const ExperimentConfig& cfg,
                                       bool restrict_to_sector) {
  cfg.validate();
  std::vector<ExactDiagRecord> out;
  for (int n : cfg.qubits) {
    const auto h = build_hamiltonian(cfg, n);
    if (restrict_to_sector) {
      if (cfg.model != ModelKind::HubbardNnn ||
          cfg.mapping != QubitMapping::JordanWigner) {
        throw ConfigError("sector-restricted diagonalization needs model "
                          "hubbard-nnn with mapping jw");
      }
      const int k = cfg.particles(n);
      const auto g = sector_ground(h, k);
      out.push_back({n, g.energy, g.degeneracy(), std::to_string(k)});
    } else {
      const auto g = exact_ground(h);
      out.push_back({n, g.energy, g.degeneracy(), "full"});
    }
  }
  return out;
}

}  // namespace vqelab
