#include "hetnet/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace hetnet::geometry {

TierPoints sample_ppp(double density, double radius, RandomStream& rng) {
  TierPoints pts;
  if (density <= 0.0) return pts;
  const double mean = density * std::numbers::pi * radius * radius;
  std::poisson_distribution<long> count_dist(mean);
  const long count = count_dist(rng);
  pts.xs.reserve(static_cast<std::size_t>(count));
  pts.ys.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return pts;
}

NetworkRealization sample_network(const NetworkConfig& cfg, double radius, RandomStream& rng) {
  NetworkRealization r;
  r.radius = radius;
  r.tiers.reserve(cfg.size());
  for (const auto& tier : cfg.tiers) r.tiers.push_back(sample_ppp(tier.density, radius, rng));
  return r;
}

std::vector<std::optional<Nearest>> nearest_per_tier(const NetworkRealization& r, Point from) {
  std::vector<std::optional<Nearest>> out(r.tiers.size());
  for (std::size_t k = 0; k < r.tiers.size(); ++k) {
    const TierPoints& t = r.tiers[k];
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double dx = t.xs[i] - from.x;
      const double dy = t.ys[i] - from.y;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        best_i = i;
      }
    }
    if (!t.empty()) out[k] = Nearest{best_i, std::sqrt(best), t.at(best_i)};
  }
  return out;
}

std::vector<std::optional<double>> nearest_distances(const std::vector<std::optional<Nearest>>& n) {
  std::vector<std::optional<double>> d(n.size());
  for (std::size_t k = 0; k < n.size(); ++k)
    if (n[k]) d[k] = n[k]->distance;
  return d;
}

double radius_for_min_count(const NetworkConfig& cfg, double min_points) {
  double r2 = 0.0;
  for (const auto& t : cfg.tiers) r2 = std::max(r2, min_points / (std::numbers::pi * t.density));
  return std::sqrt(r2);
}

double auto_radius(const NetworkConfig& cfg) { return radius_for_min_count(cfg, 300.0); }

}  // namespace hetnet::geometry
