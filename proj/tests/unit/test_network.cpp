#include <gtest/gtest.h>

#include <cmath>

#include "hetnet/errors.hpp"
#include "hetnet/network.hpp"
#include "hetnet/presets.hpp"

using namespace hetnet;

namespace {

std::string failing_field(const NetworkConfig& cfg) {
  try {
    cfg.validate();
  } catch (const ConfigError& e) {
    return e.field();
  }
  return {};
}

}  // namespace

TEST(Network, DeltaIsAntennasMinusUsersPlusOne) {
  TierConfig t;
  t.antennas = 4;
  t.users_per_rb = 3;
  EXPECT_EQ(t.delta(), 2);
}

TEST(Network, ValidationNamesTheField) {
  NetworkConfig cfg = presets::section_vi_case(1);
  EXPECT_EQ(failing_field(cfg), "");
  cfg.tiers[1].users_per_rb = 3;
  EXPECT_EQ(failing_field(cfg), "tiers[1].users_per_rb");
  cfg = presets::section_vi_case(1);
  cfg.tiers[0].pathloss = 2.0;
  EXPECT_EQ(failing_field(cfg), "tiers[0].pathloss");
  cfg = presets::section_vi_case(1);
  cfg.noise = -1.0;
  EXPECT_EQ(failing_field(cfg), "noise");
  cfg.tiers.clear();
  EXPECT_EQ(failing_field(cfg), "tiers");
}

TEST(Network, ExclusionRadiusInvertsAssociationBoundary) {
  NetworkConfig cfg = presets::section_vi_case(4);
  cfg.tiers[1].pathloss = 3.3;
  const double x = 0.17;
  for (std::size_t k = 0; k < 2; ++k) {
    const std::size_t j = 1 - k;
    const double r = exclusion_radius(cfg, k, j, x);
    // A tier-j BS at r ties with the tier-k BS at x.
    const double lhs = association_weight(cfg.tiers[j]) * std::pow(r, -cfg.tiers[j].pathloss);
    const double rhs = association_weight(cfg.tiers[k]) * std::pow(x, -cfg.tiers[k].pathloss);
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-12);
  }
  EXPECT_DOUBLE_EQ(exclusion_radius(cfg, 0, 0, x), x);
}

TEST(Network, DecibelRoundTrip) {
  EXPECT_DOUBLE_EQ(db_to_linear(0.0), 1.0);
  EXPECT_NEAR(db_to_linear(10.0), 10.0, 1e-12);
  for (double db : {-60.0, -3.0, 7.5, 20.0}) EXPECT_NEAR(linear_to_db(db_to_linear(db)), db, 1e-12);
}

TEST(Presets, SectionSixCases) {
  const NetworkConfig c5 = presets::section_vi_case(5);
  EXPECT_EQ(c5.tiers[0].antennas, 2);
  EXPECT_EQ(c5.tiers[0].delta(), 2);
  EXPECT_NEAR(c5.tiers[1].bias / c5.tiers[0].bias, std::sqrt(2.0), 1e-15);
  EXPECT_EQ(c5.tiers[0].power, 5.0 * c5.tiers[1].power);
  const NetworkConfig c2 = presets::section_vi_case(2);
  EXPECT_EQ(c2.tiers[0].users_per_rb, 4);
  EXPECT_EQ(c2.tiers[0].delta(), 1);
  EXPECT_THROW(presets::section_vi_case(8), std::out_of_range);
  for (int id = 1; id <= 7; ++id) EXPECT_NO_THROW(presets::section_vi_case(id).validate());
}
