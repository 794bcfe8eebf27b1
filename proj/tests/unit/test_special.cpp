#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "hetnet/errors.hpp"
#include "hetnet/random.hpp"
#include "hetnet/special.hpp"
#include "oracles.hpp"

using namespace hetnet;
using namespace hetnet::special;

namespace {

// Partition numbers p(0..20).
constexpr std::uint64_t kPartitionCount[] = {1,  1,  2,  3,   5,   7,   11,  15,  22,  30, 42,
                                             56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
// Bell numbers B_0..B_20.
constexpr std::uint64_t kBell[] = {1ULL,          1ULL,          2ULL,          5ULL,
                                   15ULL,         52ULL,         203ULL,        877ULL,
                                   4140ULL,       21147ULL,      115975ULL,     678570ULL,
                                   4213597ULL,    27644437ULL,   190899322ULL,  1382958545ULL,
                                   10480142147ULL, 82864869804ULL, 682076806159ULL, 5832742205057ULL,
                                   51724158235372ULL};

}  // namespace

TEST(Partitions, CountsMatchPartitionNumbers) {
  for (int n = 0; n <= kMaxPartitionOrder; ++n)
    EXPECT_EQ(partitions(n).size(), kPartitionCount[n]) << "n=" << n;
}

TEST(Partitions, EveryEntryIsAValidDistinctPartition) {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::vector<int>> seen;
    for (const auto& p : partitions(n)) {
      ASSERT_EQ(p.order, n);
      int weighted = 0;
      for (int i = 1; i <= n; ++i) weighted += i * p.multiplicity[static_cast<std::size_t>(i - 1)];
      EXPECT_EQ(weighted, n);
      EXPECT_TRUE(seen.insert(p.multiplicity).second);
    }
  }
}

TEST(Partitions, ZeroHasTheEmptyPartition) {
  const auto p = partitions(0);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].parts(), 0);
}

TEST(Partitions, CapacityEnforced) {
  EXPECT_THROW(partitions(kMaxPartitionOrder + 1), CapacityError);
  EXPECT_THROW(partition_table(kMaxPartitionOrder + 1), CapacityError);
}

TEST(Partitions, TableIsCachedAndEqualToFreshEnumeration) {
  const auto& a = partition_table(9);
  const auto& b = partition_table(9);
  EXPECT_EQ(&a, &b);
  ASSERT_EQ(a.size(), partitions(9).size());
}

TEST(FaaDiBruno, CoefficientsSumToBellNumbers) {
  for (int n = 0; n <= kMaxPartitionOrder; ++n) {
    std::uint64_t sum = 0;
    for (const auto& p : partition_table(n)) sum += faa_coefficient(p);
    EXPECT_EQ(sum, kBell[n]) << "n=" << n;
  }
}

TEST(FaaDiBruno, KnownCoefficients) {
  // n = 4: {4}:1, {3,1}:4, {2,2}:3, {2,1,1}:6, {1,1,1,1}:1
  EXPECT_EQ(faa_coefficient({4, {0, 0, 0, 1}}), 1u);
  EXPECT_EQ(faa_coefficient({4, {1, 0, 1, 0}}), 4u);
  EXPECT_EQ(faa_coefficient({4, {0, 2, 0, 0}}), 3u);
  EXPECT_EQ(faa_coefficient({4, {2, 1, 0, 0}}), 6u);
  EXPECT_EQ(faa_coefficient({4, {4, 0, 0, 0}}), 1u);
  EXPECT_THROW(faa_coefficient({4, {1, 1, 0, 0}}), std::invalid_argument);
}

TEST(CompleteBell, ExpLinearIdentityIsExact) {
  // exp(c s): only the first derivative is non-zero, so B_n = c^n.
  for (double c : {-2.5, -1.0, 0.5, 3.0}) {
    for (int n = 0; n <= 12; ++n) {
      std::vector<double> x(static_cast<std::size_t>(n), 0.0);
      if (n > 0) x[0] = c;
      EXPECT_EQ(complete_bell(n, x), std::pow(c, n)) << "c=" << c << " n=" << n;
    }
  }
}

TEST(CompleteBell, AllOnesGivesBellNumbers) {
  for (int n = 0; n <= 15; ++n) {
    std::vector<double> x(static_cast<std::size_t>(n), 1.0);
    EXPECT_EQ(complete_bell(n, x), static_cast<double>(kBell[n]));
  }
}

TEST(CompleteBell, GaussianExponentMatchesHermite) {
  // d^n/ds^n exp(s^2/2) at s: x_1 = s, x_2 = 1; B_n = He_n-like sum
  // computed here by the recurrence B_{n+1} = s B_n + n B_{n-1}.
  const double s = 0.7;
  std::vector<double> ref = {1.0, s};
  for (int n = 1; n < 10; ++n) ref.push_back(s * ref[static_cast<std::size_t>(n)] + n * ref[static_cast<std::size_t>(n - 1)]);
  for (int n = 0; n <= 10; ++n) {
    std::vector<double> x(static_cast<std::size_t>(std::max(n, 2)), 0.0);
    x[0] = s;
    x[1] = 1.0;
    EXPECT_NEAR(complete_bell(n, x), ref[static_cast<std::size_t>(n)], 1e-12 * std::abs(ref[static_cast<std::size_t>(n)]));
  }
}

TEST(BetaComp, ArcsineValues) {
  EXPECT_NEAR(beta_comp(0.5, 0.5, 0.0), std::numbers::pi, 1e-14);
  EXPECT_NEAR(beta_comp(0.5, 0.5, 0.5), std::numbers::pi / 2.0, 1e-14);
  EXPECT_NEAR(beta_comp(1.5, 1.5, 0.5), std::numbers::pi / 16.0, 1e-14);
  EXPECT_EQ(beta_comp(2.0, 3.0, 1.0), 0.0);
}

TEST(BetaComp, MatchesQuadratureOracle) {
  RandomStream rng(7, 0);
  for (int i = 0; i < 100; ++i) {
    const double a = 0.1 + 6.0 * rng.uniform();
    const double b = 0.1 + 6.0 * rng.uniform();
    const double z = rng.uniform();
    // Integrate in w = 1 - u so the endpoint singularity sits at an exact zero.
    const double ref = oracle::integrate(
        [&](double w) { return std::pow(w, b - 1.0) * std::pow(1.0 - w, a - 1.0); }, 0.0, 1.0 - z);
    EXPECT_NEAR(beta_comp(a, b, z), ref, 1e-10 * std::abs(ref)) << a << ' ' << b << ' ' << z;
  }
}

TEST(BetaComp, ComplementFormKeepsPrecisionNearOne) {
  // B'(a, 1, 1 - e) = (1 - (1-e)^a) / a ~ e for small e.
  const double e = 1e-14;
  const double a = 2.5;
  EXPECT_NEAR(beta_comp_from_complement(a, 1.0, e), -std::expm1(a * std::log1p(-e)) / a, 1e-26);
  EXPECT_THROW(beta_comp(0.0, 1.0, 0.5), std::domain_error);
  EXPECT_THROW(beta_comp(1.0, 1.0, 1.5), std::domain_error);
}

TEST(UpperGamma, UnitShapeIsExponential) {
  for (double x : {0.01, 0.5, 1.0, 7.0}) EXPECT_NEAR(upper_gamma(1.0, x), std::exp(-x), 1e-15);
}

TEST(UpperGamma, ZeroShapeIsExponentialIntegral) {
  EXPECT_NEAR(upper_gamma(0.0, 1.0), 0.21938393439552029, 1e-14);
  for (double x : {0.01, 0.3, 0.9, 1.5, 4.0})
    EXPECT_NEAR(upper_gamma(0.0, x), oracle::e1_series(x), 1e-12 * oracle::e1_series(x)) << x;
}

TEST(UpperGamma, SatisfiesRecurrence) {
  // Gamma(a + 1, x) = a Gamma(a, x) + x^a e^{-x}
  for (double a : {-3.0, -2.0, -1.0, -2.5, -0.5, -0.75}) {
    for (double x : {0.05, 0.7, 1.0, 2.0, 9.0}) {
      const double lhs = upper_gamma(a + 1.0, x);
      const double rhs = a * upper_gamma(a, x) + std::pow(x, a) * std::exp(-x);
      EXPECT_NEAR(lhs, rhs, 1e-11 * std::abs(lhs)) << a << ' ' << x;
    }
  }
}

TEST(UpperGamma, MatchesQuadratureOracle) {
  for (double a : {-2.7, -1.0, -0.4, 0.0, 0.6, 1.0}) {
    for (double x : {0.2, 1.0, 3.0}) {
      const double ref = oracle::integrate_from(
          [&](double t) { return std::pow(t, a - 1.0) * std::exp(-t); }, x);
      EXPECT_NEAR(upper_gamma(a, x), ref, 1e-10 * ref) << a << ' ' << x;
    }
  }
}

TEST(RisingFactorial, Values) {
  EXPECT_EQ(rising_factorial(1, 0), 1.0);
  EXPECT_EQ(rising_factorial(1, 5), 120.0);
  EXPECT_EQ(rising_factorial(3, 4), 3.0 * 4 * 5 * 6);
}

TEST(GammaSample, MomentsMatchShape) {
  for (int shape : {1, 2, 4, 9}) {
    RandomStream rng(11, static_cast<std::uint64_t>(shape));
    const int n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double g = gamma_sample(shape, rng);
      ASSERT_GT(g, 0.0);
      sum += g;
      sum2 += g * g;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    EXPECT_NEAR(mean, shape, 5.0 * std::sqrt(shape / static_cast<double>(n)));
    EXPECT_NEAR(var, shape, 0.03 * shape);
  }
}

TEST(GammaSample, DistributionPassesKs) {
  // Gamma(3, 1) CDF: 1 - e^{-x}(1 + x + x^2/2)
  RandomStream rng(3, 3);
  std::vector<double> xs(20000);
  for (auto& x : xs) x = gamma_sample(3, rng);
  const double d = oracle::ks_statistic(xs, [](double x) { return 1.0 - std::exp(-x) * (1.0 + x + 0.5 * x * x); });
  EXPECT_LT(d, oracle::ks_critical_1pct(xs.size()));
}
