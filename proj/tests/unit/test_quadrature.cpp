#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "hetnet/errors.hpp"
#include "hetnet/quadrature.hpp"

using namespace hetnet;

TEST(Quadrature, PolynomialIsExact) {
  const auto r = quad::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
  EXPECT_NEAR(r.value, 9.0 - 3.0 + 3.0, 1e-13);
}

TEST(Quadrature, EndpointSingularity) {
  const auto r = quad::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                 {1e-10, 1e-10, 5000});
  EXPECT_NEAR(r.value, 2.0, 1e-8);
}

TEST(Quadrature, SemiInfinite) {
  EXPECT_NEAR(quad::integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1.0).value,
              1.0, 1e-12);
  EXPECT_NEAR(quad::integrate_to_infinity([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0).value,
              std::numbers::pi / 2.0, 1e-10);
  EXPECT_NEAR(quad::integrate_to_infinity([](double x) { return std::exp(-x * x); }, 1.0, 0.3).value,
              0.5 * std::sqrt(std::numbers::pi) * std::erfc(1.0), 1e-12);
}

TEST(Quadrature, ScaleDoesNotChangeTheAnswer) {
  for (double scale : {0.01, 1.0, 100.0})
    EXPECT_NEAR(quad::integrate_to_infinity([](double x) { return std::exp(-3.0 * x); }, 0.0, scale).value,
                1.0 / 3.0, 1e-10);
}

TEST(Quadrature, NonFiniteIntegrandThrows) {
  EXPECT_THROW(quad::integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
               QuadratureError);
}

TEST(Quadrature, IntervalBudgetThrows) {
  EXPECT_THROW(quad::integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-9, 1.0, {1e-14, 1e-14, 20}),
               QuadratureError);
}
