#include "hetnet/presets.hpp"

#include <stdexcept>
#include <string>

#include "hetnet/selection.hpp"

namespace hetnet::presets {

namespace {

TierConfig tier(double power, double density, int antennas, int psi) {
  TierConfig t;
  t.power = power;
  t.density = density;
  t.antennas = antennas;
  t.users_per_rb = psi;
  t.pathloss = 4.0;
  return t;
}

}  // namespace

NetworkConfig section_vi_case(int id, double user_density) {
  // {M1, Psi1, M2, Psi2}; SUBF serves one user, SDMA serves M users.
  static constexpr int table[7][4] = {
      {4, 1, 2, 1},  // 4-2, SUBF / SUBF
      {4, 4, 2, 2},  // 4-2, SDMA / SDMA
      {4, 4, 2, 1},  // 4-2, SDMA / SUBF
      {4, 1, 2, 2},  // 4-2, SUBF / SDMA
      {2, 1, 1, 1},  // 2-1, SUBF / SISO
      {2, 2, 1, 1},  // 2-1, SDMA / SISO
      {1, 1, 1, 1},  // SISO
  };
  if (id < 1 || id > 7) throw std::out_of_range("section_vi_case: id must be in 1..7, got " + std::to_string(id));
  const auto& row = table[id - 1];
  NetworkConfig cfg;
  cfg.tiers = {tier(50.0, 150.0, row[0], row[1]), tier(10.0, 300.0, row[2], row[3])};
  cfg.user_density = user_density;
  return selection::with_bias(cfg, selection::BiasSource::sqrt_psi_delta);
}

NetworkConfig fig2_config(double density) {
  NetworkConfig cfg;
  cfg.tiers = {tier(5.0, density, 4, 3), tier(1.0, density, 2, 2)};
  return selection::with_bias(cfg, selection::BiasSource::sqrt_psi_delta);
}

NetworkConfig single_tier_siso(double density) {
  NetworkConfig cfg;
  cfg.tiers = {tier(1.0, density, 1, 1)};
  return cfg;
}

}  // namespace hetnet::presets
