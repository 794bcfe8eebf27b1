#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "hetnet/geometry.hpp"
#include "hetnet/presets.hpp"
#include "hetnet/raster.hpp"
#include "hetnet/selection.hpp"

using namespace hetnet;
using namespace hetnet::raster;

namespace {

geometry::NetworkRealization sample(const NetworkConfig& cfg, const RasterSpec& spec, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  const double reach = std::hypot(spec.x_max, spec.y_max);
  return geometry::sample_network(cfg, std::max(geometry::auto_radius(cfg), 2.0 * reach), rng);
}

}  // namespace

TEST(Raster, DefaultSpecSpansFourInterSiteDistances) {
  const NetworkConfig cfg = presets::section_vi_case(1);
  const RasterSpec s = default_spec(cfg);
  EXPECT_EQ(s.width, 256u);
  EXPECT_NEAR(s.x_max - s.x_min, 4.0 / std::sqrt(300.0), 1e-15);
  EXPECT_EQ(s.x_min, -s.x_max);
}

TEST(Raster, SingleTierIsConstant) {
  NetworkConfig cfg = presets::single_tier_siso(10.0);
  const RasterSpec spec = default_spec(cfg, 24);
  const auto real = sample(cfg, spec, 1);
  for (const char* rule : {"biased:explicit", "max-power"}) {
    const Raster r = association_map(real, spec, selection::parse_rule(rule), cfg);
    for (int t : r.tiers) EXPECT_EQ(t, 0);
  }
}

TEST(Raster, BiasedMapIsWeightedVoronoi) {
  const NetworkConfig cfg = presets::section_vi_case(4);
  const RasterSpec spec = default_spec(cfg, 40);
  const auto real = sample(cfg, spec, 2);
  const Raster r = association_map(real, spec, selection::parse_rule("biased:explicit"), cfg);
  EXPECT_EQ(r.invalid, 0u);
  for (std::size_t row = 0; row < spec.height; ++row)
    for (std::size_t col = 0; col < spec.width; ++col) {
      const auto u = spec.center(row, col);
      std::vector<double> best(cfg.size(), 0.0);
      for (std::size_t j = 0; j < cfg.size(); ++j)
        for (std::size_t i = 0; i < real.tiers[j].size(); ++i) {
          const auto p = real.tiers[j].at(i);
          const double v = association_weight(cfg.tiers[j]) * std::pow(std::hypot(p.x - u.x, p.y - u.y), -4.0);
          best[j] = std::max(best[j], v);
        }
      const int t = r.at(row, col);
      for (std::size_t j = 0; j < cfg.size(); ++j) EXPECT_GE(best[static_cast<std::size_t>(t)], best[j]);
    }
}

TEST(Raster, SisoMeanSinrMapEqualsBiasedMap) {
  NetworkConfig cfg = presets::section_vi_case(7);
  const RasterSpec spec = default_spec(cfg, 20);
  const auto real = sample(cfg, spec, 3);
  const Raster a = association_map(real, spec, selection::parse_rule("biased:explicit"), cfg);
  const Raster b = association_map(real, spec, selection::parse_rule("mean-sinr"), cfg);
  EXPECT_EQ(a.tiers, b.tiers);
  EXPECT_EQ(region_mismatch(a, b), 0.0);
}

TEST(Raster, MismatchIdentityComplementAndSpecCheck) {
  Raster a;
  a.spec = {4, 2, 0, 1, 0, 1};
  a.tiers = {0, 1, 1, 0, 0, 0, 1, 1};
  Raster b = a;
  EXPECT_EQ(region_mismatch(a, b), 0.0);
  for (auto& t : b.tiers) t = 1 - t;
  EXPECT_EQ(region_mismatch(a, b), 1.0);
  b.tiers[0] = kInvalidPixel;
  b.tiers[1] = a.tiers[1];
  EXPECT_NEAR(region_mismatch(a, b), 6.0 / 7.0, 1e-15);
  Raster c = a;
  c.spec.width = 8;
  c.spec.height = 1;
  EXPECT_THROW(region_mismatch(a, c), std::invalid_argument);
}

TEST(Raster, RasterMustFitInsideWindow) {
  const NetworkConfig cfg = presets::single_tier_siso(10.0);
  RandomStream rng(1, 1);
  const auto real = geometry::sample_network(cfg, 0.1, rng);
  EXPECT_THROW(association_map(real, default_spec(cfg, 8), selection::parse_rule("max-power"), cfg),
               std::invalid_argument);
}

TEST(Raster, TextRoundTripAndCsvShape) {
  Raster a;
  a.spec = {3, 2, -0.5, 0.25, -1.0, 1.0 / 3.0};
  a.tiers = {0, 2, kInvalidPixel, 1, 1, 0};
  a.invalid = 1;
  std::stringstream ss;
  write_text(ss, a);
  const std::string text = ss.str();
  EXPECT_EQ(text.substr(text.find('\n') + 1), "1 3 0\n2 2 1\n");
  const Raster b = read_text(ss);
  EXPECT_EQ(b.spec, a.spec);
  EXPECT_EQ(b.tiers, a.tiers);
  EXPECT_EQ(b.invalid, 1u);

  std::stringstream csv;
  write_csv(csv, a);
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "row,col,x,y,tier");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 6);
  std::stringstream bad("2 2 0 1 0 1\n1 x\n");
  EXPECT_THROW(read_text(bad), std::runtime_error);
}
