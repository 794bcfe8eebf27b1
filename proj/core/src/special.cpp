#include "hetnet/special.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "hetnet/errors.hpp"

namespace hetnet::special {

int PartitionVector::parts() const noexcept {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
}

namespace {

// Distributes `remaining` over part sizes <= `largest`, largest first.
void enumerate(int remaining, int largest, std::vector<int>& m, std::vector<PartitionVector>& out) {
  if (remaining == 0) {
    out.push_back({static_cast<int>(m.size()), m});
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    for (int count = remaining / part; count >= 1; --count) {
      m[part - 1] = count;
      enumerate(remaining - count * part, part - 1, m, out);
      m[part - 1] = 0;
    }
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw CapacityError("faa_coefficient: intermediate product exceeds 64 bits");
  return r;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

}  // namespace

std::vector<PartitionVector> partitions(int n) {
  if (n < 0) throw std::domain_error("partitions: order must be non-negative");
  if (n > kMaxPartitionOrder)
    throw CapacityError("partitions: order " + std::to_string(n) + " exceeds cap " +
                        std::to_string(kMaxPartitionOrder));
  std::vector<PartitionVector> out;
  if (n == 0) {
    out.push_back({0, {}});
    return out;
  }
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  enumerate(n, n, m, out);
  return out;
}

const std::vector<PartitionVector>& partition_table(int n) {
  static std::array<std::vector<PartitionVector>, kMaxPartitionOrder + 1> tables;
  static std::array<std::once_flag, kMaxPartitionOrder + 1> once;
  if (n < 0 || n > kMaxPartitionOrder) (void)partitions(n);  // throws the right error
  std::call_once(once[static_cast<std::size_t>(n)],
                 [n] { tables[static_cast<std::size_t>(n)] = partitions(n); });
  return tables[static_cast<std::size_t>(n)];
}

std::uint64_t faa_coefficient(const PartitionVector& p) {
  if (static_cast<int>(p.multiplicity.size()) != p.order)
    throw std::invalid_argument("faa_coefficient: multiplicity length must equal order");
  long weighted = 0;
  for (int i = 1; i <= p.order; ++i) {
    const int mi = p.multiplicity[static_cast<std::size_t>(i - 1)];
    if (mi < 0) throw std::invalid_argument("faa_coefficient: negative multiplicity");
    weighted += static_cast<long>(i) * mi;
  }
  if (weighted != p.order) throw std::invalid_argument("faa_coefficient: sum i*m_i != n");

  const std::uint64_t numerator = factorial(p.order);
  std::uint64_t denominator = 1;
  for (int i = 1; i <= p.order; ++i) {
    const int mi = p.multiplicity[static_cast<std::size_t>(i - 1)];
    denominator = checked_mul(denominator, factorial(mi));
    const std::uint64_t fi = factorial(i);
    for (int r = 0; r < mi; ++r) denominator = checked_mul(denominator, fi);
  }
  return numerator / denominator;
}

double beta_comp_from_complement(double a, double b, double one_minus_z) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::domain_error("beta_comp: requires a > 0 and b > 0");
  if (!(one_minus_z >= 0.0 && one_minus_z <= 1.0))
    throw std::domain_error("beta_comp: z must lie in [0, 1]");
  if (one_minus_z == 0.0) return 0.0;
  // int_z^1 u^{a-1}(1-u)^{b-1} du == int_0^{1-z} w^{b-1}(1-w)^{a-1} dw.
  return boost::math::beta(b, a, one_minus_z);
}

double complete_bell(int n, std::span<const double> x) {
  if (n < 0) throw std::domain_error("complete_bell: order must be non-negative");
  if (x.size() < static_cast<std::size_t>(n))
    throw std::invalid_argument("complete_bell: need one value per derivative order");
  double sum = 0.0;
  for (const auto& p : partition_table(n)) {
    double term = static_cast<double>(faa_coefficient(p));
    for (int l = 1; l <= n; ++l) {
      const int ml = p.multiplicity[static_cast<std::size_t>(l - 1)];
      if (ml > 0) term *= std::pow(x[static_cast<std::size_t>(l - 1)], ml);
    }
    sum += term;
  }
  return sum;
}

double beta_comp(double a, double b, double z) {
  if (!(z >= 0.0 && z <= 1.0)) throw std::domain_error("beta_comp: z must lie in [0, 1]");
  return beta_comp_from_complement(a, b, 1.0 - z);
}

namespace {

// Modified Lentz evaluation of the Legendre continued fraction for Gamma(a, x).
double upper_gamma_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double step = d * c;
    h *= step;
    if (std::abs(step - 1.0) < kEps) return std::exp(-x + a * std::log(x)) * h;
  }
  throw std::runtime_error("upper_gamma: continued fraction did not converge");
}

}  // namespace

double upper_gamma(double a, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("upper_gamma: requires x > 0");
  if (!(a <= 1.0) || !std::isfinite(a)) throw std::domain_error("upper_gamma: requires a <= 1");
  if (a == 1.0) return std::exp(-x);
  if (x >= 1.0) return upper_gamma_fraction(a, x);

  // Small x: recur downward, Gamma(a, x) = (Gamma(a + 1, x) - x^a e^{-x}) / a.
  double start = 0.0;
  double g = 0.0;
  if (a == std::floor(a)) {
    start = 0.0;
    g = boost::math::expint(1, x);
  } else {
    start = a + std::ceil(-a);  // in (0, 1)
    if (start <= 0.0) start += 1.0;
    g = boost::math::tgamma(start, x);
  }
  for (double cur = start - 1.0; cur >= a - 0.5; cur -= 1.0)
    g = (g - std::pow(x, cur) * std::exp(-x)) / cur;
  return g;
}

double rising_factorial(int psi, int l) {
  double r = 1.0;
  for (int i = 0; i < l; ++i) r *= static_cast<double>(psi + i);
  return r;
}

double gamma_sample(int shape, RandomStream& rng) {
  if (shape < 1) throw std::domain_error("gamma_sample: shape must be a positive integer");
  // Sum of `shape` unit exponentials, folded as -log of uniform products in
  // blocks of eight to stay clear of underflow.
  double total = 0.0;
  int left = shape;
  while (left > 0) {
    const int block = left < 8 ? left : 8;
    double prod = 1.0;
    for (int i = 0; i < block; ++i) prod *= rng.uniform();
    total -= std::log(prod);
    left -= block;
  }
  return total;
}

}  // namespace hetnet::special
