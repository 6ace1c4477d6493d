// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include "vqelab/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace vqelab {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kCurvature = 0.9;
constexpr int kMaxLineSearchSteps = 30;

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<double> axpy(std::span<const double> x, double alpha,
                         std::span<const double> d) {
  std::vector<double> out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += alpha * d[i];
  return out;
}

struct CurvaturePair {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

// Two-loop recursion: returns -H g for the implicit inverse Hessian H.
std::vector<double> lbfgs_direction(const std::deque<CurvaturePair>& memory,
                                    std::span<const double> g) {
  std::vector<double> q(g.begin(), g.end());
  std::vector<double> alpha(memory.size());
  for (std::size_t i = memory.size(); i-- > 0;) {
    alpha[i] = memory[i].rho * dot(memory[i].s, q);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] -= alpha[i] * memory[i].y[k];
  }
  if (!memory.empty()) {
    const auto& last = memory.back();
    const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
    for (double& v : q) v *= gamma;
  }
  for (std::size_t i = 0; i < memory.size(); ++i) {
    const double beta = memory[i].rho * dot(memory[i].y, q);
    for (std::size_t k = 0; k < q.size(); ++k) {
      q[k] += memory[i].s[k] * (alpha[i] - beta);
    }
  }
  for (double& v : q) v = -v;
  return q;
}

struct TrialPoint {
  double alpha = 0.0;
  double value = 0.0;
  std::vector<double> x;
  std::vector<double> grad;  // empty until evaluated
  double slope = 0.0;
};

class LineSearch {
 public:
  LineSearch(const Objective& f, const GradientFn& gradient,
             MinimizeResult& stats)
      : f_(f), gradient_(gradient), stats_(stats) {}

  // Returns a point satisfying the strong Wolfe conditions, or the lowest
  // evaluated point (possibly without gradient) when none was found.
  std::pair<bool, TrialPoint> search(const TrialPoint& start,
                                     std::span<const double> direction,
                                     double alpha0) {
    start_ = &start;
    direction_ = direction;
    best_ = start;
    TrialPoint prev = start;
    double alpha = alpha0;
    for (int step = 0; step < kMaxLineSearchSteps; ++step) {
      TrialPoint cur = evaluate_value(alpha);
      if (!armijo(cur) || (step > 0 && cur.value >= prev.value)) {
        return zoom(prev, cur);
      }
      evaluate_gradient(cur);
      if (std::abs(cur.slope) <= -kCurvature * start.slope) return {true, cur};
      if (cur.slope >= 0.0) return zoom(cur, prev);
      prev = cur;
      alpha *= 2.0;
    }
    return {false, best_};
  }

 private:
  bool armijo(const TrialPoint& p) const {
    return p.value <= start_->value + kArmijo * p.alpha * start_->slope;
  }

  TrialPoint evaluate_value(double alpha) {
    TrialPoint p;
    p.alpha = alpha;
    p.x = axpy(start_->x, alpha, direction_);
    p.value = f_(p.x);
    ++stats_.function_calls;
    if (std::isfinite(p.value) && p.value < best_.value) best_ = p;
    if (!std::isfinite(p.value)) p.value = std::numeric_limits<double>::infinity();
    return p;
  }

  void evaluate_gradient(TrialPoint& p) {
    p.grad = gradient_(p.x, p.value);
    ++stats_.gradient_calls;
    p.slope = dot(p.grad, direction_);
    if (p.alpha == best_.alpha) best_ = p;
  }

  std::pair<bool, TrialPoint> zoom(TrialPoint lo, TrialPoint hi) {
    for (int step = 0; step < kMaxLineSearchSteps; ++step) {
      const double a_lo = lo.alpha;
      const double a_hi = hi.alpha;
      const double width = a_hi - a_lo;
      if (std::abs(width) <= 1e-16 * std::max(1.0, std::abs(a_lo))) break;
      // Quadratic model from phi(lo), phi'(lo), phi(hi), safeguarded.
      double alpha = a_lo + 0.5 * width;
      const double denom = hi.value - lo.value - lo.slope * width;
      if (std::isfinite(hi.value) && denom > 0.0) {
        const double cand = a_lo - lo.slope * width * width / (2.0 * denom);
        const double lower = std::min(a_lo, a_hi) + 0.1 * std::abs(width);
        const double upper = std::max(a_lo, a_hi) - 0.1 * std::abs(width);
        if (cand >= lower && cand <= upper) alpha = cand;
      }
      TrialPoint cur = evaluate_value(alpha);
      if (!armijo(cur) || cur.value >= lo.value) {
        hi = std::move(cur);
        continue;
      }
      evaluate_gradient(cur);
      if (std::abs(cur.slope) <= -kCurvature * start_->slope) return {true, cur};
      if (cur.slope * width >= 0.0) hi = lo;
      lo = std::move(cur);
    }
    return {false, best_};
  }

  const Objective& f_;
  const GradientFn& gradient_;
  MinimizeResult& stats_;
  const TrialPoint* start_ = nullptr;
  std::span<const double> direction_;
  TrialPoint best_;
};

}  // namespace

void OptimizerOptions::validate() const {
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd_step must be > 0");
  if (!(gradient_tolerance > 0.0)) {
    throw std::invalid_argument("gradient_tolerance must be > 0");
  }
  if (!(function_tolerance > 0.0)) {
    throw std::invalid_argument("function_tolerance must be > 0");
  }
  if (max_iterations < 0) {
    throw std::invalid_argument("max_iterations must be >= 0");
  }
  if (lbfgs_memory < 1) throw std::invalid_argument("lbfgs_memory must be >= 1");
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::GradientTolerance:
      return "gradient_tolerance";
    case Termination::FunctionTolerance:
      return "function_tolerance";
    case Termination::MaxIterations:
      return "max_iterations";
    case Termination::LineSearchFailure:
      return "line_search_failure";
  }
  return "unknown";
}

std::vector<double> forward_diff_gradient(const Objective& f,
                                          std::span<const double> theta,
                                          double f_theta, double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  if (!std::isfinite(f_theta)) {
    throw std::domain_error("objective is not finite at the base point "
                            "(component -1)");
  }
  std::vector<double> shifted(theta.begin(), theta.end());
  std::vector<double> grad(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    shifted[k] = theta[k] + delta;
    const double value = f(shifted);
    shifted[k] = theta[k];
    if (!std::isfinite(value)) {
      throw std::domain_error("objective is not finite when shifting "
                              "component " + std::to_string(k));
    }
    grad[k] = (value - f_theta) / delta;
  }
  return grad;
}

std::vector<double> forward_diff_gradient(const Objective& f,
                                          std::span<const double> theta,
                                          double delta) {
  if (!(delta > 0.0)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  return forward_diff_gradient(f, theta, f(theta), delta);
}

MinimizeResult lbfgs_minimize(const Objective& f, const GradientFn& gradient,
                              std::span<const double> theta0,
                              const OptimizerOptions& opts) {
  opts.validate();
  for (double v : theta0) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("initial parameters must be finite");
    }
  }
  MinimizeResult result;
  TrialPoint current;
  current.x.assign(theta0.begin(), theta0.end());
  current.value = f(current.x);
  ++result.function_calls;
  if (!std::isfinite(current.value)) {
    throw std::domain_error("objective is not finite at the initial point");
  }
  result.initial_value = current.value;
  current.grad = gradient(current.x, current.value);
  ++result.gradient_calls;

  std::deque<CurvaturePair> memory;
  LineSearch line_search(f, gradient, result);
  result.termination = Termination::MaxIterations;

  for (int iter = 0;; ++iter) {
    if (max_abs(current.grad) < opts.gradient_tolerance) {
      result.termination = Termination::GradientTolerance;
      break;
    }
    if (iter >= opts.max_iterations) {
      result.termination = Termination::MaxIterations;
      break;
    }
    std::vector<double> direction = lbfgs_direction(memory, current.grad);
    double slope = dot(direction, current.grad);
    if (!(slope < 0.0)) {
      memory.clear();
      direction.assign(current.grad.begin(), current.grad.end());
      for (double& v : direction) v = -v;
      slope = dot(direction, current.grad);
    }
    current.slope = slope;
    current.alpha = 0.0;
    const double alpha0 =
        memory.empty() ? std::min(1.0, 1.0 / std::max(1e-300, max_abs(current.grad)))
                       : 1.0;

    auto [ok, next] = line_search.search(current, direction, alpha0);
    if (!ok) {
      if (!(next.value < current.value)) {
        result.termination = Termination::LineSearchFailure;
        break;
      }
      // Accept the best decrease seen, restart the curvature memory.
      if (next.grad.empty()) {
        next.grad = gradient(next.x, next.value);
        ++result.gradient_calls;
      }
      memory.clear();
    } else {
      CurvaturePair pair;
      pair.s.resize(next.x.size());
      pair.y.resize(next.x.size());
      for (std::size_t k = 0; k < next.x.size(); ++k) {
        pair.s[k] = next.x[k] - current.x[k];
        pair.y[k] = next.grad[k] - current.grad[k];
      }
      const double sy = dot(pair.s, pair.y);
      if (sy > 1e-12 * std::sqrt(dot(pair.s, pair.s) * dot(pair.y, pair.y))) {
        pair.rho = 1.0 / sy;
        memory.push_back(std::move(pair));
        if (static_cast<int>(memory.size()) > opts.lbfgs_memory) {
          memory.pop_front();
        }
      }
    }
    ++result.iterations;
    const double decrease = current.value - next.value;
    const double scale =
        std::max({std::abs(current.value), std::abs(next.value), 1.0});
    current = std::move(next);
    if (decrease <= opts.function_tolerance * scale) {
      result.termination = Termination::FunctionTolerance;
      break;
    }
  }
  result.theta = std::move(current.x);
  result.value = current.value;
  return result;
}

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::vector<std::uint32_t> words;
  for (auto p : parts) {
    words.push_back(static_cast<std::uint32_t>(p & 0xffffffffU));
    words.push_back(static_cast<std::uint32_t>(p >> 32));
  }
  std::seed_seq seq(words.begin(), words.end());
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

std::vector<double> gaussian_init(int count, std::uint64_t seed) {
  if (count < 0) throw std::invalid_argument("count must be non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(kInitVariance));
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& v : out) v = normal(rng);
  return out;
}

double vqe_energy(const PauliSum& hamiltonian, const AnsatzSpec& spec,
                  std::span<const double> theta,
                  std::span<const int> initial_occupations) {
  return expectation(prepare_state(spec, theta, initial_occupations),
                     hamiltonian);
}

LayerwiseResult layerwise_optimize(const LayerwiseProblem& problem,
                                   int max_layers, std::uint64_t seed,
                                   const OptimizerOptions& opts) {
  if (max_layers < 1) throw std::invalid_argument("max_layers must be >= 1");
  opts.validate();
  const int n = problem.hamiltonian.n_qubits();
  LayerwiseResult out;
  std::vector<double> theta;
  for (int layers = 1; layers <= max_layers; ++layers) {
    const AnsatzSpec spec(n, layers, problem.family);
    const int fresh = spec.parameter_count() - static_cast<int>(theta.size());
    const auto draws = gaussian_init(
        fresh, derive_seed({seed, static_cast<std::uint64_t>(layers)}));
    theta.insert(theta.end(), draws.begin(), draws.end());

    const Objective energy = [&](std::span<const double> x) {
      return vqe_energy(problem.hamiltonian, spec, x,
                        problem.initial_occupations);
    };
    const GradientFn grad = [&](std::span<const double> x, double fx) {
      return forward_diff_gradient(energy, x, fx, opts.fd_step);
    };

    LayerRecord rec;
    rec.layers = layers;
    rec.initial_theta = theta;
    try {
      const auto res = lbfgs_minimize(energy, grad, theta, opts);
      rec.theta = res.theta;
      rec.energy = res.value;
      rec.iterations = res.iterations;
      rec.gradient_calls = res.gradient_calls;
      rec.termination = res.termination;
    } catch (const std::domain_error&) {
      rec.theta = theta;
      rec.energy = std::numeric_limits<double>::quiet_NaN();
      rec.termination = Termination::LineSearchFailure;
    }
    theta = rec.theta;
    out.layers.push_back(std::move(rec));
  }
  return out;
}

}  // namespace vqelab
