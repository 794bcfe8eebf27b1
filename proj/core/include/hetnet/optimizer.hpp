#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hetnet/analytic.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/network.hpp"

namespace hetnet::optimizer {

/// `points` log-spaced values on [lo, hi], endpoints included.
std::vector<double> log_grid(double lo = 0.01, double hi = 100.0, std::size_t points = 81);

struct Metric {
  enum class Kind { coverage, rate };
  Kind kind = Kind::coverage;
  double value = 1.0;  ///< linear SINR threshold, or rate threshold rho

  static Metric coverage_db(double db) { return {Kind::coverage, db_to_linear(db)}; }
  static Metric rate(double rho) { return {Kind::rate, rho}; }
};

struct Engine {
  enum class Kind { analytic, monte_carlo };
  Kind kind = Kind::analytic;
  /// Realization count, seed, radius and threads for the MC engine. Its cfg,
  /// rule and grids are overwritten per evaluation.
  montecarlo::SimPlan plan;
};

struct Evaluation {
  double value = 0.0;
  double std_error = 0.0;  ///< zero for the analytic engine
};

/// Metric for `cfg` with its biases taken literally.
Evaluation evaluate(const NetworkConfig& cfg, const Metric& metric, const Engine& engine = {});

struct SweepResult {
  std::vector<double> grid;  ///< B_varied / B_reference
  std::vector<Evaluation> values;
  std::size_t argmax = 0;
  double best_ratio = 0.0;
  double best_value = 0.0;
  double sqrt_ratio = 0.0;  ///< ratio of the sqrt(Psi/Delta) candidates
  Evaluation sqrt_value;
  double linear_ratio = 0.0;  ///< ratio of the 1 + Psi/Delta candidates
  Evaluation linear_value;
};

/// Sweep the bias of tier `varied` with tier `reference` pinned at B = 1;
/// every other tier keeps its configured bias. Ties go to the lowest ratio.
SweepResult sweep_bias(const NetworkConfig& cfg, const Metric& metric, std::span<const double> grid,
                       const Engine& engine = {}, std::size_t varied = 1, std::size_t reference = 0);

/// Rate threshold rho_p with R_c(rho_p) = p, solved by bisection to relative
/// tolerance 1e-4. Throws std::runtime_error when no bracket is found.
double percentile_rate(const NetworkConfig& cfg, double p,
                       analytic::CoveragePath path = analytic::CoveragePath::automatic);

struct RateOptimum {
  double rho = 0.0;
  double best_ratio = 0.0;
  double best_value = 0.0;
};

/// Rate-optimal bias ratio for each rate threshold.
std::vector<RateOptimum> rate_optimal_bias(const NetworkConfig& cfg, std::span<const double> rhos,
                                           std::span<const double> grid, std::size_t varied = 1,
                                           std::size_t reference = 0);

}  // namespace hetnet::optimizer
