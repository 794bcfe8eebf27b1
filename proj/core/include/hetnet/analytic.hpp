#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hetnet/network.hpp"

namespace hetnet::analytic {

/// Everything the interference Laplace transform needs for a user served by
/// tier `serving` at distance `distance`, evaluated at transform variable `s`.
struct LaplaceContext {
  const NetworkConfig* cfg = nullptr;
  std::size_t serving = 0;
  double distance = 0.0;
  double s = 0.0;
  std::vector<double> radii;        ///< per-tier exclusion radii r_j
  std::vector<double> u;            ///< Beta lower limits u_j in (0, 1]
  std::vector<double> one_minus_u;  ///< 1 - u_j, kept separately for precision
};

LaplaceContext make_context(const NetworkConfig& cfg, std::size_t serving, double distance,
                            double s);

/// C_j for tier j given 1 - u_j:
/// (2 pi / alpha_j) sum_{m=1}^{Psi_j} binom(Psi_j, m) B'(Psi_j - m + 2/alpha_j, m - 2/alpha_j, u_j).
double c_coefficient(const TierConfig& tier, double one_minus_u);

/// C_j at SINR threshold T for serving tier k, where u_j = 1 / (1 + T / (Delta^_j B^_j)).
double c_coefficient_at(double threshold, const NetworkConfig& cfg, std::size_t j, std::size_t k);

/// D_j(l) = (lambda_j / alpha_j) (Psi_j + l - 1)! / (Psi_j - 1)! B'(Psi_j + 2/alpha_j, l - 2/alpha_j, u_j).
double d_coefficient(int l, const TierConfig& tier, double one_minus_u);

/// Laplace transform of noise plus interference, E[exp(-s (I + N))].
double laplace_in(const LaplaceContext& ctx);
double log_laplace_in(const LaplaceContext& ctx);

/// n-th derivative in s via Faa di Bruno over the integer partitions of n.
/// Requires s > 0 when n >= 1.
double laplace_derivative(int n, const LaplaceContext& ctx);

/// P[SINR > T] for a user served by tier k at distance x (linear T).
/// Throws NumericalConsistencyError if the raw series leaves [-1e-9, 1 + 1e-9].
double sinr_ccdf(double threshold, double distance, std::size_t k, const NetworkConfig& cfg);

enum class CoveragePath {
  automatic,    ///< closed form when every alpha is equal and N = 0
  closed_form,  ///< equal alpha, N = 0 only
  quadrature,   ///< integral over the serving distance; always applicable
};

/// P[SINR_k > T, tier k serves] for one tier.
double coverage_joint(double threshold, std::size_t k, const NetworkConfig& cfg,
                      CoveragePath path = CoveragePath::automatic);

struct CoveragePoint {
  double threshold = 0.0;  ///< linear
  std::vector<double> per_tier_joint;
  double total = 0.0;
};

CoveragePoint coverage(double threshold, const NetworkConfig& cfg,
                       CoveragePath path = CoveragePath::automatic);

/// Conditional coverage P_ck = joint_k / A_k.
std::vector<double> coverage_per_tier(double threshold, const NetworkConfig& cfg,
                                      CoveragePath path = CoveragePath::automatic);

struct CoverageCurve {
  std::vector<double> thresholds_db;
  std::vector<CoveragePoint> points;
};

CoverageCurve coverage_curve(std::span<const double> thresholds_db, const NetworkConfig& cfg,
                             CoveragePath path = CoveragePath::automatic);

struct RatePoint {
  double rho = 0.0;
  std::vector<double> sinr_thresholds;  ///< t_k = 2^{rho N_k / (W_k Psi_k)} - 1
  std::vector<double> per_tier;         ///< conditional rate coverage R_k
  double total = 0.0;                   ///< R_c = sum_k A_k R_k
};

/// Rate coverage under the mean-load approximation.
RatePoint rate_coverage(double rho, const NetworkConfig& cfg,
                        CoveragePath path = CoveragePath::automatic);

struct RateCurve {
  std::vector<double> association;
  std::vector<double> mean_load;
  std::vector<RatePoint> points;
};

RateCurve rate_curve(std::span<const double> rhos, const NetworkConfig& cfg,
                     CoveragePath path = CoveragePath::automatic);

/// SINR threshold that a tier-k user must clear to reach rate rho.
double rate_to_sinr_threshold(double rho, double mean_load, const TierConfig& tier);

}  // namespace hetnet::analytic
