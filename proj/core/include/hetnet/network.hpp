#pragma once

#include <cstddef>
#include <vector>

namespace hetnet {

/// Parameters shared by every base station of one tier. Powers and densities
/// are linear; the bias multiplies average received power before association.
struct TierConfig {
  double power = 1.0;      ///< per-user transmit power P
  double density = 1.0;    ///< base stations per unit area
  int antennas = 1;        ///< M
  int users_per_rb = 1;    ///< Psi, users co-scheduled per resource block
  double pathloss = 4.0;   ///< alpha, must exceed 2
  double bias = 1.0;       ///< B
  double bandwidth = 1.0;  ///< W, time-frequency resource per BS

  /// Effective serving-link Gamma shape under zero forcing, M - Psi + 1.
  int delta() const noexcept { return antennas - users_per_rb + 1; }
};

struct NetworkConfig {
  std::vector<TierConfig> tiers;
  double noise = 0.0;
  double user_density = 0.0;

  std::size_t size() const noexcept { return tiers.size(); }
  const TierConfig& operator[](std::size_t k) const { return tiers[k]; }

  /// Throws ConfigError naming the first violated field.
  void validate() const;

  bool equal_pathloss() const noexcept;
};

/// Biased average received power weight B_j P_j Delta_j (distance term excluded).
double association_weight(const TierConfig& tier) noexcept;

/// Lemma-3 exclusion radius of tier `j` when the user is served by tier `k`
/// at distance `serving_distance`: (P^ Delta^ B^)^{1/alpha_j} x^{alpha_k/alpha_j}.
double exclusion_radius(const NetworkConfig& cfg, std::size_t k, std::size_t j,
                        double serving_distance);

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

}  // namespace hetnet
