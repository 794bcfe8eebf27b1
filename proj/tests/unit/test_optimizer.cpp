#include <gtest/gtest.h>

#include <cmath>

#include "hetnet/analytic.hpp"
#include "hetnet/optimizer.hpp"
#include "hetnet/presets.hpp"

using namespace hetnet;
using namespace hetnet::optimizer;

namespace {

NetworkConfig siso_pair(double power_ratio) {
  NetworkConfig cfg = presets::section_vi_case(7);
  cfg.tiers[0].power = cfg.tiers[1].power * power_ratio;
  return cfg;
}

std::size_t steps_from_one(const SweepResult& s) {
  std::size_t one = 0;
  for (std::size_t i = 0; i < s.grid.size(); ++i)
    if (std::abs(std::log(s.grid[i])) < std::abs(std::log(s.grid[one]))) one = i;
  return s.argmax > one ? s.argmax - one : one - s.argmax;
}

}  // namespace

TEST(LogGrid, ShapeAndEndpoints) {
  const auto g = log_grid();
  ASSERT_EQ(g.size(), 81u);
  EXPECT_EQ(g.front(), 0.01);
  EXPECT_EQ(g.back(), 100.0);
  EXPECT_NEAR(g[40], 1.0, 1e-12);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(g[i] / g[i - 1], std::pow(10.0, 0.05), 1e-12);
  EXPECT_THROW(log_grid(1.0, 0.5, 5), std::invalid_argument);
}

TEST(SweepBias, SymmetricSisoOptimumAtUnity) {
  NetworkConfig cfg = siso_pair(1.0);
  cfg.tiers[0].density = cfg.tiers[1].density;
  const auto s = sweep_bias(cfg, Metric::coverage_db(0.0), log_grid());
  EXPECT_LE(steps_from_one(s), 1u);
}

TEST(SweepBias, SisoOptimumAtUnityForAnyPowerRatio) {
  for (double ratio : {0.1, 1.0, 5.0, 30.0}) {
    const auto s = sweep_bias(siso_pair(ratio), Metric::coverage_db(0.0), log_grid(0.01, 100.0, 41));
    EXPECT_LE(steps_from_one(s), 1u) << "power ratio " << ratio;
  }
}

TEST(SweepBias, ArgmaxDominatesAndTiesGoLow) {
  const auto s = sweep_bias(presets::section_vi_case(3), Metric::rate(1.0), log_grid(0.01, 100.0, 21));
  for (const auto& v : s.values) EXPECT_GE(s.best_value, v.value);
  for (std::size_t i = 0; i < s.argmax; ++i) EXPECT_LT(s.values[i].value, s.best_value);
}

TEST(SweepBias, CaseFiveCandidateIsCloseToOptimum) {
  const auto s = sweep_bias(presets::section_vi_case(5), Metric::coverage_db(0.0), log_grid());
  EXPECT_NEAR(s.sqrt_ratio, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.linear_ratio, 2.0 / 1.5, 1e-15);
  EXPECT_LE(s.best_value - s.sqrt_value.value, 0.01);
}

TEST(SweepBias, Deterministic) {
  const auto grid = log_grid(0.1, 10.0, 9);
  const auto a = sweep_bias(presets::section_vi_case(1), Metric::coverage_db(3.0), grid);
  const auto b = sweep_bias(presets::section_vi_case(1), Metric::coverage_db(3.0), grid);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(a.values[i].value, b.values[i].value);

  Engine mc;
  mc.kind = Engine::Kind::monte_carlo;
  mc.plan.realizations = 300;
  mc.plan.seed = 5;
  mc.plan.threads = 1;
  const auto c = sweep_bias(presets::section_vi_case(1), Metric::coverage_db(3.0), grid, mc);
  const auto d = sweep_bias(presets::section_vi_case(1), Metric::coverage_db(3.0), grid, mc);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(c.values[i].value, d.values[i].value);
    EXPECT_GT(c.values[i].std_error, 0.0);
  }
}

TEST(SweepBias, RejectsBadArguments) {
  const auto cfg = presets::section_vi_case(1);
  const std::vector<double> unsorted{1.0, 0.5};
  EXPECT_THROW(sweep_bias(cfg, Metric::coverage_db(0.0), unsorted), std::invalid_argument);
  EXPECT_THROW(sweep_bias(cfg, Metric::coverage_db(0.0), log_grid(), {}, 1, 1), std::invalid_argument);
}

TEST(PercentileRate, DefiningIdentity) {
  for (int id : {1, 5, 7}) {
    const NetworkConfig cfg = presets::section_vi_case(id);
    for (double p : {0.5, 0.9, 0.95}) {
      const double rho = percentile_rate(cfg, p);
      EXPECT_NEAR(analytic::rate_coverage(rho, cfg).total, p, 1e-3) << "case " << id << " p=" << p;
    }
  }
  EXPECT_THROW(percentile_rate(presets::section_vi_case(1), 1.0), std::domain_error);
}

TEST(PercentileRate, ApproachesZeroAsPApproachesOne) {
  const NetworkConfig cfg = presets::section_vi_case(2);
  const double a = percentile_rate(cfg, 0.99);
  const double b = percentile_rate(cfg, 0.9999);
  EXPECT_LT(b, a);
  EXPECT_LT(b, 1e-3);
}

TEST(PercentileRate, SubfBeatsSisoAtBestBias) {
  const auto grid = log_grid(0.01, 100.0, 21);
  const auto best = [&](int id) {
    double top = 0.0;
    NetworkConfig cfg = presets::section_vi_case(id);
    for (double ratio : grid) {
      cfg.tiers[0].bias = 1.0;
      cfg.tiers[1].bias = ratio;
      top = std::max(top, percentile_rate(cfg, 0.95));
    }
    return top;
  };
  EXPECT_GT(best(1), best(7));
}

TEST(RateOptimalBias, ReportsPerThreshold) {
  const std::vector<double> rhos{0.5, 2.0};
  const auto r = rate_optimal_bias(presets::section_vi_case(5), rhos, log_grid(0.01, 100.0, 21));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].rho, 0.5);
  EXPECT_GT(r[0].best_value, r[1].best_value);
}
