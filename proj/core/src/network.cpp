#include "hetnet/network.hpp"

#include <cmath>
#include <string>

#include "hetnet/errors.hpp"

namespace hetnet {

namespace {

std::string tier_field(std::size_t k, const char* name) {
  return "tiers[" + std::to_string(k) + "]." + name;
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void NetworkConfig::validate() const {
  if (tiers.empty()) throw ConfigError("tiers", "at least one tier is required");
  if (!std::isfinite(noise) || noise < 0.0) throw ConfigError("noise", "must be finite and >= 0");
  if (!std::isfinite(user_density) || user_density < 0.0)
    throw ConfigError("user_density", "must be finite and >= 0");

  for (std::size_t k = 0; k < tiers.size(); ++k) {
    const TierConfig& t = tiers[k];
    if (!positive_finite(t.power)) throw ConfigError(tier_field(k, "power"), "must be > 0");
    if (!positive_finite(t.density)) throw ConfigError(tier_field(k, "density"), "must be > 0");
    if (t.antennas < 1) throw ConfigError(tier_field(k, "antennas"), "must be >= 1");
    if (t.users_per_rb < 1) throw ConfigError(tier_field(k, "users_per_rb"), "must be >= 1");
    if (t.users_per_rb > t.antennas)
      throw ConfigError(tier_field(k, "users_per_rb"), "must not exceed antennas (Psi <= M)");
    if (!std::isfinite(t.pathloss) || t.pathloss <= 2.0)
      throw ConfigError(tier_field(k, "pathloss"), "must be > 2");
    if (!positive_finite(t.bias)) throw ConfigError(tier_field(k, "bias"), "must be > 0");
    if (!positive_finite(t.bandwidth)) throw ConfigError(tier_field(k, "bandwidth"), "must be > 0");
  }
}

bool NetworkConfig::equal_pathloss() const noexcept {
  for (const auto& t : tiers)
    if (t.pathloss != tiers.front().pathloss) return false;
  return true;
}

double association_weight(const TierConfig& tier) noexcept {
  return tier.bias * tier.power * static_cast<double>(tier.delta());
}

double exclusion_radius(const NetworkConfig& cfg, std::size_t k, std::size_t j,
                        double serving_distance) {
  const TierConfig& serving = cfg.tiers.at(k);
  const TierConfig& other = cfg.tiers.at(j);
  const double ratio = association_weight(other) / association_weight(serving);
  return std::pow(ratio, 1.0 / other.pathloss) *
         std::pow(serving_distance, serving.pathloss / other.pathloss);
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

}  // namespace hetnet
