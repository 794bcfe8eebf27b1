#include "hetnet/optimizer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hetnet/selection.hpp"

namespace hetnet::optimizer {

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0.0 && hi > lo) || points < 2)
    throw std::invalid_argument("log_grid: need 0 < lo < hi and at least two points");
  std::vector<double> g(points);
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) g[i] = std::exp(a + step * static_cast<double>(i));
  g.front() = lo;
  g.back() = hi;
  return g;
}

Evaluation evaluate(const NetworkConfig& cfg, const Metric& metric, const Engine& engine) {
  if (engine.kind == Engine::Kind::analytic) {
    if (metric.kind == Metric::Kind::coverage) return {analytic::coverage(metric.value, cfg).total, 0.0};
    return {analytic::rate_coverage(metric.value, cfg).total, 0.0};
  }
  montecarlo::SimPlan plan = engine.plan;
  plan.cfg = cfg;
  plan.rule = {selection::RuleKind::biased_power, selection::BiasSource::explicit_value};
  plan.thresholds_db.clear();
  plan.rates.clear();
  if (metric.kind == Metric::Kind::coverage) {
    plan.thresholds_db = {linear_to_db(metric.value)};
    const auto r = montecarlo::simulate(plan);
    return {r.coverage[0].mean, r.coverage[0].std_error};
  }
  plan.rates = {metric.value};
  const auto r = montecarlo::simulate(plan);
  return {r.rate_coverage[0].mean, r.rate_coverage[0].std_error};
}

namespace {

NetworkConfig with_ratio(NetworkConfig cfg, std::size_t varied, std::size_t reference, double ratio) {
  cfg.tiers[reference].bias = 1.0;
  cfg.tiers[varied].bias = ratio;
  return cfg;
}

double candidate_ratio(const NetworkConfig& cfg, std::size_t varied, std::size_t reference,
                       selection::BiasSource source) {
  const auto& v = cfg.tiers[varied];
  const auto& r = cfg.tiers[reference];
  return selection::candidate_bias(source, v.users_per_rb, v.delta()) /
         selection::candidate_bias(source, r.users_per_rb, r.delta());
}

}  // namespace

SweepResult sweep_bias(const NetworkConfig& cfg, const Metric& metric, std::span<const double> grid,
                       const Engine& engine, std::size_t varied, std::size_t reference) {
  cfg.validate();
  if (varied >= cfg.size() || reference >= cfg.size() || varied == reference)
    throw std::invalid_argument("sweep_bias: varied and reference must be distinct tiers");
  if (grid.empty()) throw std::invalid_argument("sweep_bias: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("sweep_bias: grid must be strictly increasing");

  SweepResult out;
  out.grid.assign(grid.begin(), grid.end());
  for (double ratio : grid) out.values.push_back(evaluate(with_ratio(cfg, varied, reference, ratio), metric, engine));
  for (std::size_t i = 1; i < out.values.size(); ++i)
    if (out.values[i].value > out.values[out.argmax].value) out.argmax = i;
  out.best_ratio = out.grid[out.argmax];
  out.best_value = out.values[out.argmax].value;

  out.sqrt_ratio = candidate_ratio(cfg, varied, reference, selection::BiasSource::sqrt_psi_delta);
  out.sqrt_value = evaluate(with_ratio(cfg, varied, reference, out.sqrt_ratio), metric, engine);
  out.linear_ratio = candidate_ratio(cfg, varied, reference, selection::BiasSource::one_plus_psi_delta);
  out.linear_value = evaluate(with_ratio(cfg, varied, reference, out.linear_ratio), metric, engine);
  return out;
}

double percentile_rate(const NetworkConfig& cfg, double p, analytic::CoveragePath path) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("percentile_rate: p must lie in (0, 1)");
  cfg.validate();
  const auto rc = [&](double rho) { return analytic::rate_coverage(rho, cfg, path).total; };

  double lo = 0.0;
  double hi = 1.0;
  double r_hi = rc(hi);
  for (int i = 0; i < 64 && r_hi >= p; ++i) {
    lo = hi;
    hi *= 2.0;
    r_hi = rc(hi);
  }
  if (r_hi >= p) {
    std::ostringstream msg;
    msg << "percentile_rate: no bracket for p = " << p << "; R_c(0) = 1, R_c(" << hi << ") = " << r_hi;
    throw std::runtime_error(msg.str());
  }
  while (hi - lo > 1e-4 * hi) {
    const double mid = 0.5 * (lo + hi);
    (rc(mid) >= p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<RateOptimum> rate_optimal_bias(const NetworkConfig& cfg, std::span<const double> rhos,
                                           std::span<const double> grid, std::size_t varied,
                                           std::size_t reference) {
  std::vector<RateOptimum> out;
  for (double rho : rhos) {
    const SweepResult s = sweep_bias(cfg, Metric::rate(rho), grid, {}, varied, reference);
    out.push_back({rho, s.best_ratio, s.best_value});
  }
  return out;
}

}  // namespace hetnet::optimizer
