#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hetnet/random.hpp"

namespace hetnet::special {

/// Highest derivative order the partition tables serve.
inline constexpr int kMaxPartitionOrder = 20;

/// Multi-index (m_1..m_n) with sum_i i*m_i = n, as used by Faa di Bruno's formula.
struct PartitionVector {
  int order = 0;
  std::vector<int> multiplicity;  // multiplicity[i-1] == m_i

  /// sum_i m_i, the order of the outer derivative.
  int parts() const noexcept;
};

/// Every partition of n; n == 0 gives the single empty partition.
/// Throws CapacityError above kMaxPartitionOrder.
std::vector<PartitionVector> partitions(int n);

/// Cached view of partitions(n); valid for the life of the program.
const std::vector<PartitionVector>& partition_table(int n);

/// Faa di Bruno coefficient n! / prod_i (m_i! (i!)^{m_i}), in exact integer arithmetic.
std::uint64_t faa_coefficient(const PartitionVector& p);

/// Complete Bell polynomial B_n(x_1..x_n) = sum over partitions of
/// faa_coefficient * prod x_l^{m_l}; n-th derivative of exp(g) divided by exp(g)
/// when x_l = g^(l). `x[l-1]` holds x_l and must have at least n entries.
double complete_bell(int n, std::span<const double> x);

/// Complementary incomplete Beta B'(a, b, z) = int_z^1 u^{a-1} (1-u)^{b-1} du.
double beta_comp(double a, double b, double z);

/// Same integral given one_minus_z = 1 - z directly, which keeps precision when z -> 1.
double beta_comp_from_complement(double a, double b, double one_minus_z);

/// Upper incomplete Gamma Gamma(a, x) for a <= 1 and x > 0 (a may be zero or negative).
double upper_gamma(double a, double x);

/// (psi + l - 1)! / (psi - 1)!, i.e. the rising factorial psi^(l).
double rising_factorial(int psi, int l);

/// Gamma(shape, 1) draw for integer shape >= 1, as a sum of unit exponentials.
double gamma_sample(int shape, RandomStream& rng);

}  // namespace hetnet::special
