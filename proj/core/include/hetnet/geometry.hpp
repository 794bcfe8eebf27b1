#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hetnet/network.hpp"
#include "hetnet/random.hpp"

namespace hetnet::geometry {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// One tier's base stations as flat coordinate arrays.
struct TierPoints {
  std::vector<double> xs;
  std::vector<double> ys;

  std::size_t size() const noexcept { return xs.size(); }
  bool empty() const noexcept { return xs.empty(); }
  Point at(std::size_t i) const { return {xs[i], ys[i]}; }
  void push_back(Point p) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
};

/// Sampled base stations of every tier inside a disc centred at the origin.
struct NetworkRealization {
  std::vector<TierPoints> tiers;
  double radius = 0.0;
};

struct Nearest {
  std::size_t index = 0;
  double distance = 0.0;
  Point point;
};

/// Homogeneous PPP restricted to the disc of `radius`: Poisson count, then
/// i.i.d. uniform points.
TierPoints sample_ppp(double density, double radius, RandomStream& rng);

NetworkRealization sample_network(const NetworkConfig& cfg, double radius, RandomStream& rng);

/// Per tier, the point closest to `from` (the typical user sits at the origin).
std::vector<std::optional<Nearest>> nearest_per_tier(const NetworkRealization& r,
                                                     Point from = {});

/// Distances of the per-tier nearest points, absent for empty tiers.
std::vector<std::optional<double>> nearest_distances(const std::vector<std::optional<Nearest>>& n);

/// Window radius giving every tier at least `min_points` expected points.
double radius_for_min_count(const NetworkConfig& cfg, double min_points);

/// Default simulation radius: every tier's expected count >= 300.
double auto_radius(const NetworkConfig& cfg);

}  // namespace hetnet::geometry
