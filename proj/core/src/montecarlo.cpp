#include "hetnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hetnet/errors.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/random.hpp"
#include "hetnet/special.hpp"

namespace hetnet::montecarlo {

Estimate indicator_estimate(std::uint64_t hits, std::size_t n) {
  Estimate e;
  e.n = n;
  if (n == 0) return e;
  e.mean = static_cast<double>(hits) / static_cast<double>(n);
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(n));
  return e;
}

NetworkConfig effective_config(const SimPlan& plan) {
  if (plan.rule.kind == selection::RuleKind::biased_power)
    return selection::with_bias(plan.cfg, plan.rule.bias_source);
  return plan.cfg;
}

namespace {

struct Tally {
  std::vector<std::uint64_t> coverage;
  std::vector<std::uint64_t> rate;
  std::vector<std::uint64_t> tier;
  std::uint64_t no_candidate = 0;

  Tally(std::size_t thresholds, std::size_t rates, std::size_t tiers)
      : coverage(thresholds, 0), rate(rates, 0), tier(tiers, 0) {}

  void merge(const Tally& o) {
    for (std::size_t i = 0; i < coverage.size(); ++i) coverage[i] += o.coverage[i];
    for (std::size_t i = 0; i < rate.size(); ++i) rate[i] += o.rate[i];
    for (std::size_t i = 0; i < tier.size(); ++i) tier[i] += o.tier[i];
    no_candidate += o.no_candidate;
  }
};

struct Shared {
  const SimPlan& plan;
  const NetworkConfig& cfg;  // biases applied
  double radius;
  std::vector<double> thresholds;  // linear, sorted ascending
  std::vector<double> rates;
  std::vector<double> rate_scale;  // W_k Psi_k / N_k
};

void run_one(const Shared& sh, std::size_t i, Tally& tally, ServingSample* sample) {
  RandomStream rng(sh.plan.seed, i);
  const geometry::NetworkRealization real = geometry::sample_network(sh.cfg, sh.radius, rng);
  selection::AssociationResult assoc;
  try {
    // Candidate biases are already folded into sh.cfg.
    selection::SelectionRule rule = sh.plan.rule;
    rule.bias_source = selection::BiasSource::explicit_value;
    assoc = selection::select(rule, real, sh.cfg);
  } catch (const NoCandidateError&) {
    ++tally.no_candidate;
    return;
  }
  const auto nearest = geometry::nearest_per_tier(real);
  const std::size_t serving_index = nearest[assoc.tier]->index;

  double interference = 0.0;
  for (std::size_t j = 0; j < real.tiers.size(); ++j) {
    const TierConfig& t = sh.cfg.tiers[j];
    const geometry::TierPoints& pts = real.tiers[j];
    for (std::size_t p = 0; p < pts.size(); ++p) {
      if (j == assoc.tier && p == serving_index) continue;
      const double d2 = pts.xs[p] * pts.xs[p] + pts.ys[p] * pts.ys[p];
      interference += t.power * special::gamma_sample(t.users_per_rb, rng) *
                      std::pow(d2, -0.5 * t.pathloss);
    }
  }
  const TierConfig& s = sh.cfg.tiers[assoc.tier];
  const double signal = s.power * special::gamma_sample(s.delta(), rng) *
                        std::pow(assoc.distance, -s.pathloss);
  const double denom = interference + sh.cfg.noise;
  const double sinr = denom > 0.0 ? signal / denom : std::numeric_limits<double>::infinity();

  ++tally.tier[assoc.tier];
  if (sample) *sample = {assoc.tier, assoc.distance};
  for (std::size_t t = 0; t < sh.thresholds.size(); ++t)
    if (sinr > sh.thresholds[t]) ++tally.coverage[t];
  const double rate = sh.rate_scale[assoc.tier] * std::log2(1.0 + sinr);
  for (std::size_t r = 0; r < sh.rates.size(); ++r)
    if (rate > sh.rates[r]) ++tally.rate[r];
}

}  // namespace

SimResult simulate(const SimPlan& plan) {
  plan.cfg.validate();
  if (plan.realizations == 0) throw std::invalid_argument("simulate: realizations must be >= 1");
  const NetworkConfig cfg = effective_config(plan);

  SimResult out;
  out.thresholds_db = plan.thresholds_db;
  out.rates = plan.rates;
  out.radius = plan.radius > 0.0 ? plan.radius : geometry::auto_radius(cfg);
  out.mean_load = selection::mean_load(cfg, selection::association_prob(cfg));

  Shared sh{plan, cfg, out.radius, {}, plan.rates, {}};
  for (double db : plan.thresholds_db) sh.thresholds.push_back(db_to_linear(db));
  for (std::size_t k = 0; k < cfg.size(); ++k)
    sh.rate_scale.push_back(cfg.tiers[k].bandwidth * cfg.tiers[k].users_per_rb / out.mean_load[k]);
  if (plan.record_distances) out.serving.assign(plan.realizations, ServingSample{});

  unsigned workers = plan.threads ? plan.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, plan.realizations));
  std::vector<Tally> tallies(workers, Tally(sh.thresholds.size(), sh.rates.size(), cfg.size()));
  const auto work = [&](unsigned w) {
    for (std::size_t i = w; i < plan.realizations; i += workers)
      run_one(sh, i, tallies[w], plan.record_distances ? &out.serving[i] : nullptr);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  Tally total(sh.thresholds.size(), sh.rates.size(), cfg.size());
  for (const auto& t : tallies) total.merge(t);
  const std::size_t n = plan.realizations;
  for (auto h : total.coverage) out.coverage.push_back(indicator_estimate(h, n));
  for (auto h : total.rate) out.rate_coverage.push_back(indicator_estimate(h, n));
  for (auto h : total.tier) out.association.push_back(indicator_estimate(h, n));
  out.no_candidate = total.no_candidate;
  if (plan.record_distances && total.no_candidate > 0)
    std::erase_if(out.serving, [](const ServingSample& s) { return s.distance == 0.0; });
  return out;
}

SimResult simulate_coverage(SimPlan plan) {
  plan.rates.clear();
  return simulate(plan);
}

SimResult simulate_rate(SimPlan plan) {
  plan.thresholds_db.clear();
  return simulate(plan);
}

}  // namespace hetnet::montecarlo
