#pragma once

#include <functional>

namespace hetnet::quad {

struct Tolerance {
  double absolute = 1e-10;
  double relative = 1e-10;
  int max_intervals = 2000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on a finite interval. Throws
/// QuadratureError if the error target is missed or the integrand is not finite.
Result integrate(const Integrand& f, double lo, double hi, const Tolerance& tol = {});

/// Integral over [lo, inf) via x = lo + scale * t / (1 - t). `scale` should be
/// the length scale over which f decays.
Result integrate_to_infinity(const Integrand& f, double lo, double scale,
                             const Tolerance& tol = {});

}  // namespace hetnet::quad
