#include "hetnet/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "hetnet/errors.hpp"

namespace hetnet::quad {

namespace {

// QUADPACK 7/15-point Gauss-Kronrod abscissae and weights.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo, hi, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment apply_rule(const Integrand& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kKronrod[7];
  double gauss = fc * kGauss[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[static_cast<std::size_t>(i)];
    const double pair = f(centre - dx) + f(centre + dx);
    kronrod += kKronrod[static_cast<std::size_t>(i)] * pair;
    if (i % 2 == 1) gauss += kGauss[static_cast<std::size_t>(i / 2)] * pair;
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    std::ostringstream msg;
    msg << "quadrature: non-finite integrand on [" << lo << ", " << hi << "]";
    throw QuadratureError(msg.str());
  }
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

Result integrate(const Integrand& f, double lo, double hi, const Tolerance& tol) {
  if (lo == hi) return {};
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw QuadratureError("quadrature: finite limits required; use integrate_to_infinity");

  std::priority_queue<Segment> heap;
  Segment first = apply_rule(f, lo, hi);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;

  while (error > std::max(tol.absolute, tol.relative * std::abs(total))) {
    if (intervals >= tol.max_intervals) {
      std::ostringstream msg;
      msg << "quadrature: error " << error << " above target after " << intervals << " intervals";
      throw QuadratureError(msg.str());
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval exhausted in floating point; accept what we have.
      break;
    }
    const Segment left = apply_rule(f, worst.lo, mid);
    const Segment right = apply_rule(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum to shed the drift of the running update.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {total, error, intervals};
}

Result integrate_to_infinity(const Integrand& f, double lo, double scale, const Tolerance& tol) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw QuadratureError("quadrature: scale must be positive and finite");
  const auto mapped = [&](double t) {
    const double one_minus = 1.0 - t;
    const double x = lo + scale * t / one_minus;
    const double fx = f(x);
    if (fx == 0.0) return 0.0;
    return fx * scale / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, tol);
}

}  // namespace hetnet::quad
