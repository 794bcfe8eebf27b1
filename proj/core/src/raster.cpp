#include "hetnet/raster.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "hetnet/errors.hpp"

namespace hetnet::raster {

geometry::Point RasterSpec::center(std::size_t row, std::size_t col) const {
  return {x_min + (static_cast<double>(col) + 0.5) * (x_max - x_min) / static_cast<double>(width),
          y_min + (static_cast<double>(row) + 0.5) * (y_max - y_min) / static_cast<double>(height)};
}

RasterSpec default_spec(const NetworkConfig& cfg, std::size_t pixels) {
  double densest = 0.0;
  for (const auto& t : cfg.tiers) densest = std::max(densest, t.density);
  if (!(densest > 0.0)) throw std::invalid_argument("default_spec: no tier with positive density");
  const double half = 2.0 / std::sqrt(densest);
  return {pixels, pixels, -half, half, -half, half};
}

Raster association_map(const geometry::NetworkRealization& real, const RasterSpec& spec,
                       const selection::SelectionRule& rule, const NetworkConfig& cfg) {
  if (spec.width == 0 || spec.height == 0) throw std::invalid_argument("association_map: empty raster");
  const double reach = std::max({std::hypot(spec.x_min, spec.y_min), std::hypot(spec.x_max, spec.y_min),
                                 std::hypot(spec.x_min, spec.y_max), std::hypot(spec.x_max, spec.y_max)});
  if (reach > real.radius) throw std::invalid_argument("association_map: raster extends past the window");

  selection::SelectionRule effective = rule;
  NetworkConfig biased = cfg;
  if (rule.kind == selection::RuleKind::biased_power) {
    biased = selection::with_bias(cfg, rule.bias_source);
    effective.bias_source = selection::BiasSource::explicit_value;
  }

  Raster out;
  out.spec = spec;
  out.tiers.resize(spec.width * spec.height, kInvalidPixel);
  for (std::size_t row = 0; row < spec.height; ++row) {
    for (std::size_t col = 0; col < spec.width; ++col) {
      try {
        const auto a = selection::select(effective, real, biased, spec.center(row, col));
        out.tiers[row * spec.width + col] = static_cast<int>(a.tier);
      } catch (const QuadratureError&) {
        ++out.invalid;
      } catch (const NoCandidateError&) {
        ++out.invalid;
      }
    }
  }
  return out;
}

double region_mismatch(const Raster& a, const Raster& b) {
  if (!(a.spec == b.spec)) throw std::invalid_argument("region_mismatch: raster specs differ");
  std::size_t valid = 0;
  std::size_t differ = 0;
  for (std::size_t i = 0; i < a.tiers.size(); ++i) {
    if (a.tiers[i] == kInvalidPixel || b.tiers[i] == kInvalidPixel) continue;
    ++valid;
    if (a.tiers[i] != b.tiers[i]) ++differ;
  }
  return valid ? static_cast<double>(differ) / static_cast<double>(valid) : 0.0;
}

void write_text(std::ostream& os, const Raster& r) {
  const auto old = os.precision(17);
  os << r.spec.width << ' ' << r.spec.height << ' ' << r.spec.x_min << ' ' << r.spec.x_max << ' '
     << r.spec.y_min << ' ' << r.spec.y_max << '\n';
  for (std::size_t row = 0; row < r.spec.height; ++row) {
    for (std::size_t col = 0; col < r.spec.width; ++col) {
      if (col) os << ' ';
      os << r.at(row, col) + 1;
    }
    os << '\n';
  }
  os.precision(old);
}

Raster read_text(std::istream& is) {
  Raster r;
  if (!(is >> r.spec.width >> r.spec.height >> r.spec.x_min >> r.spec.x_max >> r.spec.y_min >>
        r.spec.y_max))
    throw std::runtime_error("read_text: malformed raster header");
  r.tiers.resize(r.spec.width * r.spec.height);
  for (auto& t : r.tiers) {
    int v = 0;
    if (!(is >> v) || v < 0) throw std::runtime_error("read_text: malformed raster body");
    t = v - 1;
    if (t == kInvalidPixel) ++r.invalid;
  }
  return r;
}

void write_csv(std::ostream& os, const Raster& r) {
  const auto old = os.precision(15);
  os << "row,col,x,y,tier\n";
  for (std::size_t row = 0; row < r.spec.height; ++row)
    for (std::size_t col = 0; col < r.spec.width; ++col) {
      const geometry::Point p = r.spec.center(row, col);
      os << row << ',' << col << ',' << p.x << ',' << p.y << ',' << r.at(row, col) + 1 << '\n';
    }
  os.precision(old);
}

}  // namespace hetnet::raster
