#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hetnet/network.hpp"
#include "hetnet/selection.hpp"

namespace hetnet::montecarlo {

/// Sample mean of an indicator with its binomial standard error.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
};

Estimate indicator_estimate(std::uint64_t hits, std::size_t n);

struct SimPlan {
  NetworkConfig cfg;
  selection::SelectionRule rule;
  std::size_t realizations = 10000;
  std::uint64_t seed = 1;
  double radius = 0.0;                ///< 0 selects geometry::auto_radius
  std::vector<double> thresholds_db;  ///< SINR coverage grid
  std::vector<double> rates;          ///< rate coverage grid
  unsigned threads = 0;               ///< 0 uses the hardware concurrency
  bool record_distances = false;      ///< keep (tier, serving distance) per realization
};

struct ServingSample {
  std::size_t tier = 0;
  double distance = 0.0;
};

struct SimResult {
  std::vector<double> thresholds_db;
  std::vector<Estimate> coverage;
  std::vector<double> rates;
  std::vector<Estimate> rate_coverage;
  std::vector<Estimate> association;  ///< frequency of each serving tier
  std::size_t no_candidate = 0;       ///< realizations with every tier empty
  std::vector<double> mean_load;      ///< N_k used for the rate indicators
  double radius = 0.0;
  std::vector<ServingSample> serving;  ///< filled when record_distances is set
};

/// Configuration the rule actually associates with (candidate biases applied).
NetworkConfig effective_config(const SimPlan& plan);

/// Coverage and rate indicators for every grid point from one fading draw per
/// realization. Realization i uses stream (seed, i), so results do not depend
/// on the thread count.
SimResult simulate(const SimPlan& plan);

SimResult simulate_coverage(SimPlan plan);
SimResult simulate_rate(SimPlan plan);

}  // namespace hetnet::montecarlo
