#include "hetnet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hetnet/errors.hpp"
#include "hetnet/quadrature.hpp"
#include "hetnet/selection.hpp"
#include "hetnet/special.hpp"

namespace hetnet::analytic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kProbabilitySlack = 1e-9;

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double checked_probability(double raw, const char* what) {
  if (!(raw >= -kProbabilitySlack && raw <= 1.0 + kProbabilitySlack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": raw probability " << raw << " outside [-1e-9, 1 + 1e-9]";
    throw NumericalConsistencyError(msg.str());
  }
  return std::clamp(raw, 0.0, 1.0);
}

/// w_l = s^l |g^(l)(s)| for l = 1..order; index 0 unused.
std::vector<double> scaled_cumulants(const LaplaceContext& ctx, int order) {
  const NetworkConfig& cfg = *ctx.cfg;
  std::vector<double> w(static_cast<std::size_t>(order) + 1, 0.0);
  for (int l = 1; l <= order; ++l) {
    double acc = (l == 1) ? cfg.noise * ctx.s : 0.0;
    for (std::size_t j = 0; j < cfg.size(); ++j) {
      const TierConfig& t = cfg.tiers[j];
      acc += kTwoPi * d_coefficient(l, t, ctx.one_minus_u[j]) *
             std::pow(ctx.s * t.power, 2.0 / t.pathloss);
    }
    w[static_cast<std::size_t>(l)] = acc;
  }
  return w;
}

/// sum_{n<terms} (1/n!) sum_{m in M(n)} C(m) prod_l x_l^{m_l}, evaluated as
/// exp(log_prefactor + ...) per term. All x_l >= 0.
double partition_series(const std::vector<double>& x, int terms, double log_prefactor,
                        bool weight_by_parts_factorial = false) {
  std::vector<double> log_x(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) log_x[i] = std::log(x[i]);
  double total = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double log_nfact = std::log(factorial(n));
    for (const auto& p : special::partition_table(n)) {
      double log_term = log_prefactor - log_nfact +
                        std::log(static_cast<double>(special::faa_coefficient(p)));
      for (int l = 1; l <= n; ++l) {
        const int ml = p.multiplicity[static_cast<std::size_t>(l - 1)];
        if (ml > 0) log_term += ml * log_x[static_cast<std::size_t>(l)];
      }
      if (weight_by_parts_factorial) log_term += std::lgamma(p.parts() + 1.0);
      total += std::exp(log_term);
    }
  }
  return total;
}

}  // namespace

LaplaceContext make_context(const NetworkConfig& cfg, std::size_t serving, double distance,
                            double s) {
  if (serving >= cfg.size()) throw std::out_of_range("make_context: serving tier");
  if (!(distance > 0.0)) throw std::domain_error("make_context: distance must be > 0");
  if (!(s >= 0.0)) throw std::domain_error("make_context: s must be >= 0");
  LaplaceContext ctx;
  ctx.cfg = &cfg;
  ctx.serving = serving;
  ctx.distance = distance;
  ctx.s = s;
  const TierConfig& tk = cfg.tiers[serving];
  const double wk = association_weight(tk);
  const double path = std::pow(distance, -tk.pathloss);
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    const TierConfig& tj = cfg.tiers[j];
    ctx.radii.push_back(j == serving ? distance : exclusion_radius(cfg, serving, j, distance));
    // u_j = 1 / (1 + v_j), v_j = s P_j x^{-alpha_k} / (P^ Delta^ B^)_j
    const double v = s * tj.power * path * wk / association_weight(tj);
    ctx.u.push_back(1.0 / (1.0 + v));
    ctx.one_minus_u.push_back(v / (1.0 + v));
  }
  return ctx;
}

double c_coefficient(const TierConfig& tier, double one_minus_u) {
  const double delta = 2.0 / tier.pathloss;
  double sum = 0.0;
  for (int m = 1; m <= tier.users_per_rb; ++m)
    sum += binomial(tier.users_per_rb, m) *
           special::beta_comp_from_complement(tier.users_per_rb - m + delta, m - delta,
                                              one_minus_u);
  return kTwoPi / tier.pathloss * sum;
}

double c_coefficient_at(double threshold, const NetworkConfig& cfg, std::size_t j, std::size_t k) {
  const double v = threshold * association_weight(cfg.tiers.at(k)) / association_weight(cfg.tiers.at(j)) *
                   cfg.tiers[j].power / cfg.tiers[k].power;
  return c_coefficient(cfg.tiers[j], v / (1.0 + v));
}

double d_coefficient(int l, const TierConfig& tier, double one_minus_u) {
  if (l < 1) throw std::domain_error("d_coefficient: l must be >= 1");
  const double delta = 2.0 / tier.pathloss;
  return tier.density / tier.pathloss * special::rising_factorial(tier.users_per_rb, l) *
         special::beta_comp_from_complement(tier.users_per_rb + delta, l - delta, one_minus_u);
}

double log_laplace_in(const LaplaceContext& ctx) {
  const NetworkConfig& cfg = *ctx.cfg;
  double log_l = -ctx.s * cfg.noise;
  for (std::size_t j = 0; j < cfg.size(); ++j) {
    const TierConfig& t = cfg.tiers[j];
    if (ctx.s == 0.0) continue;
    log_l -= t.density * std::pow(ctx.s * t.power, 2.0 / t.pathloss) *
             c_coefficient(t, ctx.one_minus_u[j]);
  }
  return log_l;
}

double laplace_in(const LaplaceContext& ctx) { return std::exp(log_laplace_in(ctx)); }

double laplace_derivative(int n, const LaplaceContext& ctx) {
  if (n < 0) throw std::domain_error("laplace_derivative: order must be >= 0");
  const double value = laplace_in(ctx);
  if (n == 0) return value;
  if (!(ctx.s > 0.0)) throw std::domain_error("laplace_derivative: s must be > 0 for n >= 1");
  const std::vector<double> w = scaled_cumulants(ctx, n);
  // g^(l)(s) = (-1)^l w_l / s^l
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l)
    g[static_cast<std::size_t>(l - 1)] =
        ((l % 2) ? -1.0 : 1.0) * w[static_cast<std::size_t>(l)] / std::pow(ctx.s, l);
  const double sum = special::complete_bell(n, g);
  return value * sum;
}

double sinr_ccdf(double threshold, double distance, std::size_t k, const NetworkConfig& cfg) {
  if (!(threshold >= 0.0)) throw std::domain_error("sinr_ccdf: threshold must be >= 0");
  if (threshold == 0.0) return 1.0;
  const TierConfig& tk = cfg.tiers.at(k);
  const double s = threshold * std::pow(distance, tk.pathloss) / tk.power;
  const LaplaceContext ctx = make_context(cfg, k, distance, s);
  const int terms = tk.delta();
  const std::vector<double> w = scaled_cumulants(ctx, terms - 1);
  const double raw = partition_series(w, terms, log_laplace_in(ctx));
  return checked_probability(raw, "sinr_ccdf");
}

namespace {

double joint_closed_form(double threshold, std::size_t k, const NetworkConfig& cfg) {
  if (!cfg.equal_pathloss() || cfg.noise != 0.0)
    throw std::invalid_argument("coverage: closed form needs equal path-loss exponents and N = 0");
  const TierConfig& tk = cfg.tiers[k];
  const double alpha = tk.pathloss;
  const double wk = association_weight(tk);

  double interference = 0.0;  // sum_j lambda_j (T P^_j)^{2/alpha} C_j
  double association = 0.0;   // pi sum_j lambda_j (P^ Delta^ B^)_j^{2/alpha}
  const int terms = tk.delta();
  std::vector<double> q(static_cast<std::size_t>(terms), 0.0);
  for (const auto& tj : cfg.tiers) {
    const double wj = association_weight(tj);
    const double v = threshold * wk / wj * tj.power / tk.power;
    const double one_minus_u = v / (1.0 + v);
    const double scaled = std::pow(threshold * tj.power / tk.power, 2.0 / alpha);
    if (threshold > 0.0) interference += tj.density * scaled * c_coefficient(tj, one_minus_u);
    association += std::numbers::pi * tj.density * std::pow(wj / wk, 2.0 / alpha);
    for (int l = 1; l < terms; ++l)
      q[static_cast<std::size_t>(l)] += kTwoPi * d_coefficient(l, tj, one_minus_u) * scaled;
  }
  const double rate = interference + association;
  for (auto& ql : q) ql /= rate;
  const double log_prefactor = std::log(std::numbers::pi * tk.density / rate);
  return partition_series(q, terms, log_prefactor, /*weight_by_parts_factorial=*/true);
}

double joint_quadrature(double threshold, std::size_t k, const NetworkConfig& cfg) {
  const TierConfig& tk = cfg.tiers[k];
  const double wk = association_weight(tk);
  double spread = 0.0;
  for (const auto& tj : cfg.tiers)
    spread += tj.density * std::pow(association_weight(tj) / wk, 2.0 / tj.pathloss);
  const double scale = 1.0 / std::sqrt(std::numbers::pi * spread);

  const auto integrand = [&](double x) {
    const double tail = selection::association_tail(cfg, k, x);
    if (tail == 0.0) return 0.0;
    return sinr_ccdf(threshold, x, k, cfg) * tail * x;
  };
  const double outer = kTwoPi * tk.density;
  const quad::Result q =
      quad::integrate_to_infinity(integrand, 0.0, scale, {1e-10 / outer, 1e-10, 4000});
  return outer * q.value;
}

}  // namespace

double coverage_joint(double threshold, std::size_t k, const NetworkConfig& cfg,
                      CoveragePath path) {
  if (!(threshold >= 0.0)) throw std::domain_error("coverage: threshold must be >= 0");
  if (k >= cfg.size()) throw std::out_of_range("coverage: tier index");
  if (path == CoveragePath::automatic)
    path = (cfg.equal_pathloss() && cfg.noise == 0.0) ? CoveragePath::closed_form
                                                      : CoveragePath::quadrature;
  const double raw = path == CoveragePath::closed_form ? joint_closed_form(threshold, k, cfg)
                                                       : joint_quadrature(threshold, k, cfg);
  return checked_probability(raw, "coverage_joint");
}

CoveragePoint coverage(double threshold, const NetworkConfig& cfg, CoveragePath path) {
  CoveragePoint p;
  p.threshold = threshold;
  double total = 0.0;
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    p.per_tier_joint.push_back(coverage_joint(threshold, k, cfg, path));
    total += p.per_tier_joint.back();
  }
  p.total = checked_probability(total, "coverage");
  return p;
}

std::vector<double> coverage_per_tier(double threshold, const NetworkConfig& cfg,
                                      CoveragePath path) {
  const std::vector<double> a = selection::association_prob(cfg);
  std::vector<double> out(cfg.size());
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    if (a[k] < 1e-12) throw std::domain_error("coverage_per_tier: association probability ~ 0");
    out[k] = std::clamp(coverage_joint(threshold, k, cfg, path) / a[k], 0.0, 1.0);
  }
  return out;
}

CoverageCurve coverage_curve(std::span<const double> thresholds_db, const NetworkConfig& cfg,
                             CoveragePath path) {
  CoverageCurve curve;
  curve.thresholds_db.assign(thresholds_db.begin(), thresholds_db.end());
  for (double db : thresholds_db) curve.points.push_back(coverage(db_to_linear(db), cfg, path));
  return curve;
}

double rate_to_sinr_threshold(double rho, double mean_load, const TierConfig& tier) {
  if (!(rho >= 0.0)) throw std::domain_error("rate: rho must be >= 0");
  return std::expm1(std::numbers::ln2 * rho * mean_load / (tier.bandwidth * tier.users_per_rb));
}

namespace {

RatePoint rate_point(double rho, const NetworkConfig& cfg, std::span<const double> a,
                     std::span<const double> load, CoveragePath path) {
  RatePoint p;
  p.rho = rho;
  double total = 0.0;
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    const double t = rate_to_sinr_threshold(rho, load[k], cfg.tiers[k]);
    const double joint = coverage_joint(t, k, cfg, path);
    p.sinr_thresholds.push_back(t);
    if (a[k] < 1e-12) throw std::domain_error("rate_coverage: association probability ~ 0");
    p.per_tier.push_back(std::clamp(joint / a[k], 0.0, 1.0));
    total += joint;
  }
  p.total = checked_probability(total, "rate_coverage");
  return p;
}

}  // namespace

RatePoint rate_coverage(double rho, const NetworkConfig& cfg, CoveragePath path) {
  const std::vector<double> a = selection::association_prob(cfg);
  const std::vector<double> load = selection::mean_load(cfg, a);
  return rate_point(rho, cfg, a, load, path);
}

RateCurve rate_curve(std::span<const double> rhos, const NetworkConfig& cfg, CoveragePath path) {
  RateCurve curve;
  curve.association = selection::association_prob(cfg);
  curve.mean_load = selection::mean_load(cfg, curve.association);
  for (double rho : rhos)
    curve.points.push_back(rate_point(rho, cfg, curve.association, curve.mean_load, path));
  return curve;
}

}  // namespace hetnet::analytic
