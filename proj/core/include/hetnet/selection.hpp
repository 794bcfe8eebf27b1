#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/geometry.hpp"
#include "hetnet/network.hpp"

namespace hetnet::selection {

enum class RuleKind { biased_power, mean_sinr, max_power };

/// Where tier biases come from when the rule is biased_power.
enum class BiasSource { explicit_value, sqrt_psi_delta, one_plus_psi_delta };

struct SelectionRule {
  RuleKind kind = RuleKind::biased_power;
  BiasSource bias_source = BiasSource::explicit_value;  // ignored by mean_sinr
};

/// Accepts "biased:sqrt", "biased:linear", "biased:explicit", "mean-sinr", "max-power".
SelectionRule parse_rule(std::string_view name);
std::string to_string(const SelectionRule& rule);

/// sqrt(Psi/Delta) or 1 + Psi/Delta. explicit_value has no candidate and throws.
double candidate_bias(BiasSource source, int psi, int delta);

/// Copy of `cfg` with every tier's bias replaced by the candidate for `source`
/// (explicit_value leaves the biases untouched).
NetworkConfig with_bias(NetworkConfig cfg, BiasSource source);

struct AssociationResult {
  std::size_t tier = 0;
  double distance = 0.0;
  /// Lemma-3 interferer exclusion radius per tier; excluded_radii[tier] == distance.
  std::vector<double> excluded_radii;
};

/// argmax_j B_j P_j Delta_j d_j^{-alpha_j}, ties to the lowest tier index.
/// Throws NoCandidateError when every tier is empty.
AssociationResult select_biased(std::span<const std::optional<double>> nearest,
                                const NetworkConfig& cfg);

/// Highest average received power P_j Delta_j d_j^{-alpha_j}; biases ignored.
AssociationResult select_max_power(std::span<const std::optional<double>> nearest,
                                   const NetworkConfig& cfg);

/// Mean SINR over fading, conditioned on the realization, for a user at `user`
/// served by point `index` of tier `tier`. Every other point interferes.
/// Throws QuadratureError when the integral diverges (N = 0 and total
/// interferer shape below 2) or misses its 1e-6 relative target.
double mean_sinr(const geometry::NetworkRealization& real, std::size_t tier, std::size_t index,
                 const NetworkConfig& cfg, geometry::Point user = {});

/// argmax of mean_sinr over the nearest point of each tier.
AssociationResult select_mean_sinr(const geometry::NetworkRealization& real,
                                   const NetworkConfig& cfg, geometry::Point user = {});

/// Dispatch on rule.kind. For biased_power the bias source is applied to cfg first.
AssociationResult select(const SelectionRule& rule, const geometry::NetworkRealization& real,
                         const NetworkConfig& cfg, geometry::Point user = {});

/// One side of the two-BS mean-SINR comparison with a fixed residue W.
struct PairCandidate {
  std::size_t tier = 0;
  double received_power = 0.0;  ///< P_r = P Delta d^{-alpha}
  int psi = 1;
  int delta = 1;
};

/// Log of the per-candidate mean-SINR criterion. residue > 0 uses the
/// incomplete-Gamma form; residue == 0 uses P_r sqrt((Psi - 1)/Delta) and
/// throws std::domain_error for Psi == 1.
double pairwise_log_criterion(const PairCandidate& c, double residue);

/// Preferred tier of the pair; ties go to the lower tier index.
std::size_t pairwise_mean_sinr_rule(const PairCandidate& k, const PairCandidate& j,
                                    double residue = 0.0);

enum class ConditionFamily { stochastic_order, jensen };

struct SufficientResult {
  std::size_t tier = 0;
  ConditionFamily family = ConditionFamily::stochastic_order;
};

/// Tier meeting every condition of `family` against all other non-empty
/// tiers, if any. Stochastic order: P d^-alpha, Delta and Psi all dominate.
/// Jensen: both P Delta d^-alpha and P Psi d^-alpha dominate.
std::optional<SufficientResult> sufficient_conditions(std::span<const std::optional<double>> nearest,
                                                      const NetworkConfig& cfg,
                                                      ConditionFamily family);

/// Stochastic-order family first, then Jensen.
std::optional<SufficientResult> sufficient_conditions(std::span<const std::optional<double>> nearest,
                                                      const NetworkConfig& cfg);

/// P[no other tier beats a tier-k BS at distance x] =
/// exp(-pi sum_j lambda_j (P^ Delta^ B^)^{2/alpha_j} x^{2 alpha_k/alpha_j}).
double association_tail(const NetworkConfig& cfg, std::size_t k, double x);

/// Association probabilities: closed form when all path-loss exponents are
/// equal, radial integral otherwise.
std::vector<double> association_prob(const NetworkConfig& cfg);
std::vector<double> association_prob_closed_form(const NetworkConfig& cfg);
std::vector<double> association_prob_integral(const NetworkConfig& cfg);

/// N_k = 1 + 1.28 lambda_u A_k / lambda_k.
std::vector<double> mean_load(const NetworkConfig& cfg, std::span<const double> association);

}  // namespace hetnet::selection
