#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "hetnet/geometry.hpp"
#include "hetnet/network.hpp"
#include "hetnet/selection.hpp"

namespace hetnet::raster {

/// Pixel grid over [x_min, x_max] x [y_min, y_max]; pixel centres are sampled.
/// Row 0 is the bottom row (y_min).
struct RasterSpec {
  std::size_t width = 256;
  std::size_t height = 256;
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  geometry::Point center(std::size_t row, std::size_t col) const;
  bool operator==(const RasterSpec&) const = default;
};

inline constexpr int kInvalidPixel = -1;

struct Raster {
  RasterSpec spec;
  std::vector<int> tiers;  ///< row-major, 0-based tier index or kInvalidPixel
  std::size_t invalid = 0;

  int at(std::size_t row, std::size_t col) const { return tiers[row * spec.width + col]; }
};

/// Square window centred at the origin spanning four mean inter-site
/// distances (1/sqrt(lambda)) of the densest tier.
RasterSpec default_spec(const NetworkConfig& cfg, std::size_t pixels = 256);

/// Tier chosen by `rule` with the user moved to every pixel centre. Pixels
/// whose mean-SINR quadrature fails are marked invalid and counted.
Raster association_map(const geometry::NetworkRealization& real, const RasterSpec& spec,
                       const selection::SelectionRule& rule, const NetworkConfig& cfg);

/// Fraction of pixels valid in both rasters whose tiers differ.
/// Throws std::invalid_argument when the specs differ.
double region_mismatch(const Raster& a, const Raster& b);

/// Text format: "width height x_min x_max y_min y_max" on the first line,
/// then `height` lines of `width` 1-based tier indices (0 = invalid), row 0 first.
void write_text(std::ostream& os, const Raster& r);
Raster read_text(std::istream& is);
/// CSV with columns row,col,x,y,tier (tier 1-based, 0 = invalid).
void write_csv(std::ostream& os, const Raster& r);

}  // namespace hetnet::raster
