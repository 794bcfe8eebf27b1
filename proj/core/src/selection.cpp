#include "hetnet/selection.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hetnet/errors.hpp"
#include "hetnet/quadrature.hpp"
#include "hetnet/special.hpp"

namespace hetnet::selection {

SelectionRule parse_rule(std::string_view name) {
  if (name == "biased:sqrt") return {RuleKind::biased_power, BiasSource::sqrt_psi_delta};
  if (name == "biased:linear") return {RuleKind::biased_power, BiasSource::one_plus_psi_delta};
  if (name == "biased:explicit" || name == "biased")
    return {RuleKind::biased_power, BiasSource::explicit_value};
  if (name == "mean-sinr") return {RuleKind::mean_sinr, BiasSource::explicit_value};
  if (name == "max-power") return {RuleKind::max_power, BiasSource::explicit_value};
  throw std::invalid_argument("unknown selection rule '" + std::string(name) + "'");
}

std::string to_string(const SelectionRule& rule) {
  switch (rule.kind) {
    case RuleKind::mean_sinr:
      return "mean-sinr";
    case RuleKind::max_power:
      return "max-power";
    case RuleKind::biased_power:
      break;
  }
  switch (rule.bias_source) {
    case BiasSource::sqrt_psi_delta:
      return "biased:sqrt";
    case BiasSource::one_plus_psi_delta:
      return "biased:linear";
    case BiasSource::explicit_value:
      break;
  }
  return "biased:explicit";
}

double candidate_bias(BiasSource source, int psi, int delta) {
  if (psi < 1 || delta < 1) throw std::domain_error("candidate_bias: Psi and Delta must be >= 1");
  const double ratio = static_cast<double>(psi) / static_cast<double>(delta);
  switch (source) {
    case BiasSource::sqrt_psi_delta:
      return std::sqrt(ratio);
    case BiasSource::one_plus_psi_delta:
      return 1.0 + ratio;
    case BiasSource::explicit_value:
      break;
  }
  throw std::invalid_argument("candidate_bias: explicit bias has no candidate function");
}

NetworkConfig with_bias(NetworkConfig cfg, BiasSource source) {
  if (source == BiasSource::explicit_value) return cfg;
  for (auto& t : cfg.tiers) t.bias = candidate_bias(source, t.users_per_rb, t.delta());
  return cfg;
}

namespace {

std::vector<double> lemma3_radii(const NetworkConfig& cfg, std::size_t k, double distance) {
  std::vector<double> radii(cfg.size());
  for (std::size_t j = 0; j < cfg.size(); ++j)
    radii[j] = (j == k) ? distance : exclusion_radius(cfg, k, j, distance);
  return radii;
}

template <typename Weight>
AssociationResult argmax_power(std::span<const std::optional<double>> nearest,
                               const NetworkConfig& cfg, Weight weight) {
  if (nearest.size() != cfg.size())
    throw std::invalid_argument("select: one nearest-distance entry per tier required");
  std::optional<std::size_t> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    if (!nearest[j]) continue;
    const double v = weight(cfg.tiers[j]) * std::pow(*nearest[j], -cfg.tiers[j].pathloss);
    if (!best || v > best_value) {
      best = j;
      best_value = v;
    }
  }
  if (!best) throw NoCandidateError("select: every tier is empty");
  return {*best, *nearest[*best], {}};
}

}  // namespace

AssociationResult select_biased(std::span<const std::optional<double>> nearest,
                                const NetworkConfig& cfg) {
  AssociationResult r = argmax_power(nearest, cfg, association_weight);
  r.excluded_radii = lemma3_radii(cfg, r.tier, r.distance);
  return r;
}

AssociationResult select_max_power(std::span<const std::optional<double>> nearest,
                                   const NetworkConfig& cfg) {
  NetworkConfig unbiased = cfg;
  for (auto& t : unbiased.tiers) t.bias = 1.0;
  AssociationResult r = argmax_power(nearest, unbiased, association_weight);
  r.excluded_radii = lemma3_radii(unbiased, r.tier, r.distance);
  return r;
}

double mean_sinr(const geometry::NetworkRealization& real, std::size_t tier, std::size_t index,
                 const NetworkConfig& cfg, geometry::Point user) {
  if (real.tiers.size() != cfg.size())
    throw std::invalid_argument("mean_sinr: realization and config disagree on tier count");
  const geometry::TierPoints& own = real.tiers.at(tier);
  if (index >= own.size()) throw std::out_of_range("mean_sinr: serving point index");

  // Mean received power of every interferer, with its Gamma shape.
  struct Interferer {
    double power;
    double shape;
  };
  std::vector<Interferer> interferers;
  double total_shape = 0.0;
  double mean_interference = 0.0;
  for (std::size_t j = 0; j < real.tiers.size(); ++j) {
    const geometry::TierPoints& pts = real.tiers[j];
    const TierConfig& t = cfg.tiers[j];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (j == tier && i == index) continue;
      const double dx = pts.xs[i] - user.x;
      const double dy = pts.ys[i] - user.y;
      const double a = t.power * std::pow(dx * dx + dy * dy, -0.5 * t.pathloss);
      interferers.push_back({a, static_cast<double>(t.users_per_rb)});
      total_shape += t.users_per_rb;
      mean_interference += a * t.users_per_rb;
    }
  }
  const double noise = cfg.noise;
  if (noise <= 0.0 && total_shape < 2.0)
    throw QuadratureError("mean_sinr: integral diverges (no noise and interferer shape < 2)");

  const auto integrand = [&](double s) {
    double log_v = -noise * s;
    for (const auto& y : interferers) log_v -= y.shape * std::log1p(s * y.power);
    return std::exp(log_v);
  };
  const double scale = 1.0 / (noise + mean_interference);
  const quad::Result q = quad::integrate_to_infinity(integrand, 0.0, scale,
                                                     {0.0, 1e-6, 4000});

  const TierConfig& serving = cfg.tiers[tier];
  const double dx = own.xs[index] - user.x;
  const double dy = own.ys[index] - user.y;
  const double signal = serving.power * serving.delta() *
                        std::pow(dx * dx + dy * dy, -0.5 * serving.pathloss);
  return signal * q.value;
}

AssociationResult select_mean_sinr(const geometry::NetworkRealization& real,
                                   const NetworkConfig& cfg, geometry::Point user) {
  const auto nearest = geometry::nearest_per_tier(real, user);
  std::optional<std::size_t> best;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < nearest.size(); ++j) {
    if (!nearest[j]) continue;
    const double v = mean_sinr(real, j, nearest[j]->index, cfg, user);
    if (!best || v > best_value) {
      best = j;
      best_value = v;
    }
  }
  if (!best) throw NoCandidateError("select_mean_sinr: every tier is empty");
  const double d = nearest[*best]->distance;
  return {*best, d, lemma3_radii(cfg, *best, d)};
}

AssociationResult select(const SelectionRule& rule, const geometry::NetworkRealization& real,
                         const NetworkConfig& cfg, geometry::Point user) {
  switch (rule.kind) {
    case RuleKind::mean_sinr:
      return select_mean_sinr(real, cfg, user);
    case RuleKind::max_power: {
      const auto d = geometry::nearest_distances(geometry::nearest_per_tier(real, user));
      return select_max_power(d, cfg);
    }
    case RuleKind::biased_power:
      break;
  }
  const auto d = geometry::nearest_distances(geometry::nearest_per_tier(real, user));
  if (rule.bias_source == BiasSource::explicit_value) return select_biased(d, cfg);
  return select_biased(d, with_bias(cfg, rule.bias_source));
}

double pairwise_log_criterion(const PairCandidate& c, double residue) {
  if (!(c.received_power > 0.0)) throw std::domain_error("pairwise rule: P_r must be > 0");
  if (c.psi < 1 || c.delta < 1) throw std::domain_error("pairwise rule: Psi, Delta must be >= 1");
  if (residue < 0.0) throw std::domain_error("pairwise rule: residue W must be >= 0");
  if (residue == 0.0) {
    if (c.psi == 1)
      throw std::domain_error("pairwise rule: W = 0 with Psi = 1 is degenerate");
    return std::log(c.received_power) + 0.5 * std::log((c.psi - 1.0) / c.delta);
  }
  const double mean_gain_power = c.received_power / c.delta;  // P_r / Delta
  const double z = residue / mean_gain_power;
  const double g = special::upper_gamma(1.0 - c.psi, z);
  if (!(g > 0.0)) throw std::domain_error("pairwise rule: incomplete Gamma underflow");
  return std::log(c.received_power) - z + c.psi * std::log(mean_gain_power) -
         (c.psi - 1.0) * std::log(residue) - std::log(g);
}

std::size_t pairwise_mean_sinr_rule(const PairCandidate& k, const PairCandidate& j,
                                    double residue) {
  const double vk = pairwise_log_criterion(k, residue);
  const double vj = pairwise_log_criterion(j, residue);
  if (vk == vj) return std::min(k.tier, j.tier);
  return vk > vj ? k.tier : j.tier;
}

std::optional<SufficientResult> sufficient_conditions(std::span<const std::optional<double>> nearest,
                                                      const NetworkConfig& cfg,
                                                      ConditionFamily family) {
  if (nearest.size() != cfg.size())
    throw std::invalid_argument("sufficient_conditions: one entry per tier required");
  const auto path_gain = [&](std::size_t i) {
    return cfg.tiers[i].power * std::pow(*nearest[i], -cfg.tiers[i].pathloss);
  };
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    if (!nearest[k]) continue;
    const TierConfig& tk = cfg.tiers[k];
    const double ak = path_gain(k);
    bool dominates = true;
    for (std::size_t i = 0; i < cfg.size() && dominates; ++i) {
      if (i == k || !nearest[i]) continue;
      const TierConfig& ti = cfg.tiers[i];
      const double ai = path_gain(i);
      if (family == ConditionFamily::stochastic_order) {
        dominates = ak >= ai && tk.delta() >= ti.delta() && tk.users_per_rb >= ti.users_per_rb;
      } else {
        dominates = ak * tk.delta() >= ai * ti.delta() &&
                    ak * tk.users_per_rb >= ai * ti.users_per_rb;
      }
    }
    if (dominates) return SufficientResult{k, family};
  }
  return std::nullopt;
}

std::optional<SufficientResult> sufficient_conditions(std::span<const std::optional<double>> nearest,
                                                      const NetworkConfig& cfg) {
  if (auto r = sufficient_conditions(nearest, cfg, ConditionFamily::stochastic_order)) return r;
  return sufficient_conditions(nearest, cfg, ConditionFamily::jensen);
}

double association_tail(const NetworkConfig& cfg, std::size_t k, double x) {
  const TierConfig& serving = cfg.tiers.at(k);
  const double wk = association_weight(serving);
  double exponent = 0.0;
  for (const auto& t : cfg.tiers) {
    const double ratio = association_weight(t) / wk;
    exponent += t.density * std::pow(ratio, 2.0 / t.pathloss) *
                std::pow(x, 2.0 * serving.pathloss / t.pathloss);
  }
  return std::exp(-std::numbers::pi * exponent);
}

std::vector<double> association_prob_closed_form(const NetworkConfig& cfg) {
  if (!cfg.equal_pathloss())
    throw std::invalid_argument("association_prob_closed_form: path-loss exponents differ");
  const double alpha = cfg.tiers.front().pathloss;
  std::vector<double> a(cfg.size());
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    const double wk = association_weight(cfg.tiers[k]);
    double denom = 0.0;
    for (const auto& t : cfg.tiers)
      denom += t.density * std::pow(association_weight(t) / wk, 2.0 / alpha);
    a[k] = cfg.tiers[k].density / denom;
  }
  return a;
}

std::vector<double> association_prob_integral(const NetworkConfig& cfg) {
  std::vector<double> a(cfg.size());
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    const double lambda = cfg.tiers[k].density;
    const auto f = [&](double r) { return association_tail(cfg, k, r) * r; };
    const double scale = 1.0 / std::sqrt(std::numbers::pi * lambda);
    const quad::Result q = quad::integrate_to_infinity(f, 0.0, scale, {1e-14, 1e-11, 4000});
    a[k] = 2.0 * std::numbers::pi * lambda * q.value;
  }
  return a;
}

std::vector<double> association_prob(const NetworkConfig& cfg) {
  return cfg.equal_pathloss() ? association_prob_closed_form(cfg) : association_prob_integral(cfg);
}

std::vector<double> mean_load(const NetworkConfig& cfg, std::span<const double> association) {
  if (association.size() != cfg.size())
    throw std::invalid_argument("mean_load: one association probability per tier required");
  std::vector<double> n(cfg.size());
  for (std::size_t k = 0; k < cfg.size(); ++k)
    n[k] = 1.0 + 1.28 * cfg.user_density * association[k] / cfg.tiers[k].density;
  return n;
}

}  // namespace hetnet::selection
