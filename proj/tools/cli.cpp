#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <CLI11.hpp>

#include "config.hpp"
#include "hetnet/analytic.hpp"
#include "hetnet/errors.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/optimizer.hpp"
#include "hetnet/random.hpp"
#include "hetnet/raster.hpp"
#include "hetnet/selection.hpp"

namespace hetnet::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  std::string out = ".";
  std::uint64_t seed = 1;
  std::size_t realizations = 10000;
  std::string engine = "analytic";
  double radius = 0.0;
  unsigned threads = 0;
  std::string rule = "biased:explicit";
  std::string grid = "-10:20:31";
  std::string rho_grid = "0.1:3:30";
  std::size_t pixels = 256;
  std::string rule_b = "mean-sinr";
  std::string metric = "coverage";
  double threshold = 0.0;
  std::string bias_grid = "0.01:100:81";
  std::size_t tier = 2;
  double p = 0.95;
  double tolerance = 0.01;
};

struct Engines {
  bool analytic = false;
  bool mc = false;
};

Engines parse_engine(const std::string& name) {
  if (name == "analytic") return {true, false};
  if (name == "mc") return {false, true};
  if (name == "both") return {true, true};
  throw CLI::ValidationError("--engine", "expected analytic, mc or both");
}

/// "start:stop:points", evenly spaced (log-spaced when `log_spaced`).
std::vector<double> parse_grid(const std::string& text, const std::string& flag, bool log_spaced = false) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  double start = 0.0;
  double stop = 0.0;
  long points = 0;
  try {
    if (parts.size() != 3) throw std::invalid_argument("shape");
    start = std::stod(parts[0]);
    stop = std::stod(parts[1]);
    points = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected start:stop:points, got '" + text + "'");
  }
  if (points < 1 || (points > 1 && !(stop > start)))
    throw CLI::ValidationError(flag, "grid must be non-empty and increasing");
  if (log_spaced) {
    if (!(start > 0.0)) throw CLI::ValidationError(flag, "log grid needs a positive start");
    if (points == 1) return {start};
    return optimizer::log_grid(start, stop, static_cast<std::size_t>(points));
  }
  std::vector<double> g(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i)
    g[static_cast<std::size_t>(i)] = points == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
  return g;
}

class CsvFile {
 public:
  CsvFile(const Options& o, const std::string& name, std::ostream& log) : path_(fs::path(o.out) / name) {
    fs::create_directories(path_.parent_path().empty() ? fs::path(".") : path_.parent_path());
    file_.open(path_);
    if (!file_) throw std::runtime_error("cannot write " + path_.string());
    file_ << std::setprecision(15);
    log << "wrote " << path_.string() << '\n';
  }
  std::ofstream& stream() { return file_; }

 private:
  fs::path path_;
  std::ofstream file_;
};

/// Joins values with commas; NaN renders as an empty field.
class Row {
 public:
  Row& operator<<(double v) {
    sep();
    if (!std::isnan(v)) buf_ << v;
    return *this;
  }
  Row& operator<<(const std::string& v) {
    sep();
    buf_ << v;
    return *this;
  }
  std::string str() const { return buf_.str() + '\n'; }

 private:
  void sep() {
    if (!first_) buf_ << ',';
    first_ = false;
    buf_ << std::setprecision(15);
  }
  std::ostringstream buf_;
  bool first_ = true;
};

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

/// Config the analytic engine should evaluate for `rule`.
NetworkConfig analytic_config(const NetworkConfig& cfg, const selection::SelectionRule& rule) {
  switch (rule.kind) {
    case selection::RuleKind::biased_power:
      return selection::with_bias(cfg, rule.bias_source);
    case selection::RuleKind::max_power: {
      NetworkConfig c = cfg;
      for (auto& t : c.tiers) t.bias = 1.0;
      return c;
    }
    case selection::RuleKind::mean_sinr:
      break;
  }
  throw std::invalid_argument("the analytic engine supports biased and max-power rules only");
}

montecarlo::SimPlan make_plan(const Options& o, const NetworkConfig& cfg) {
  montecarlo::SimPlan plan;
  plan.cfg = cfg;
  plan.rule = selection::parse_rule(o.rule);
  plan.realizations = o.realizations;
  plan.seed = o.seed;
  plan.radius = o.radius;
  plan.threads = o.threads;
  return plan;
}

int cmd_coverage(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const Engines e = parse_engine(o.engine);
  const auto rule = selection::parse_rule(o.rule);
  const std::vector<double> grid = parse_grid(o.grid, "--grid");

  std::vector<analytic::CoveragePoint> points;
  if (e.analytic) {
    const NetworkConfig acfg = analytic_config(cfg, rule);
    for (double db : grid) points.push_back(analytic::coverage(db_to_linear(db), acfg));
  }
  montecarlo::SimResult mc;
  if (e.mc) {
    montecarlo::SimPlan plan = make_plan(o, cfg);
    plan.thresholds_db = grid;
    mc = montecarlo::simulate(plan);
  }

  CsvFile csv(o, "coverage.csv", out);
  Row header;
  header << std::string("threshold_db") << std::string("total");
  for (std::size_t k = 0; k < cfg.size(); ++k) header << "tier" + std::to_string(k + 1) + "_joint";
  header << std::string("mc_total") << std::string("mc_stderr");
  csv.stream() << header.str();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Row r;
    r << grid[i] << (e.analytic ? points[i].total : kMissing);
    for (std::size_t k = 0; k < cfg.size(); ++k) r << (e.analytic ? points[i].per_tier_joint[k] : kMissing);
    r << (e.mc ? mc.coverage[i].mean : kMissing) << (e.mc ? mc.coverage[i].std_error : kMissing);
    csv.stream() << r.str();
  }
  return kOk;
}

int cmd_rate(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const Engines e = parse_engine(o.engine);
  const auto rule = selection::parse_rule(o.rule);
  const std::vector<double> grid = parse_grid(o.rho_grid, "--rho-grid");

  analytic::RateCurve curve;
  if (e.analytic) curve = analytic::rate_curve(grid, analytic_config(cfg, rule));
  montecarlo::SimResult mc;
  if (e.mc) {
    montecarlo::SimPlan plan = make_plan(o, cfg);
    plan.rates = grid;
    mc = montecarlo::simulate(plan);
  }

  CsvFile csv(o, "rate.csv", out);
  Row header;
  header << std::string("rho") << std::string("Rc");
  for (std::size_t k = 0; k < cfg.size(); ++k) header << "tier" + std::to_string(k + 1) + "_Rk";
  header << std::string("mc") << std::string("mc_stderr");
  csv.stream() << header.str();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Row r;
    r << grid[i] << (e.analytic ? curve.points[i].total : kMissing);
    for (std::size_t k = 0; k < cfg.size(); ++k) r << (e.analytic ? curve.points[i].per_tier[k] : kMissing);
    r << (e.mc ? mc.rate_coverage[i].mean : kMissing) << (e.mc ? mc.rate_coverage[i].std_error : kMissing);
    csv.stream() << r.str();
  }
  return kOk;
}

int cmd_associate(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const Engines e = parse_engine(o.engine);
  const auto rule = selection::parse_rule(o.rule);
  std::vector<double> a;
  std::vector<double> load;
  if (e.analytic) {
    const NetworkConfig acfg = analytic_config(cfg, rule);
    a = selection::association_prob(acfg);
    load = selection::mean_load(acfg, a);
  }
  montecarlo::SimResult mc;
  if (e.mc) mc = montecarlo::simulate(make_plan(o, cfg));

  CsvFile csv(o, "association.csv", out);
  csv.stream() << "tier,association,mean_load,mc_association,mc_stderr\n";
  for (std::size_t k = 0; k < cfg.size(); ++k) {
    Row r;
    r << std::to_string(k + 1) << (e.analytic ? a[k] : kMissing) << (e.analytic ? load[k] : kMissing)
      << (e.mc ? mc.association[k].mean : kMissing) << (e.mc ? mc.association[k].std_error : kMissing);
    csv.stream() << r.str();
    out << r.str();
  }
  return kOk;
}

int cmd_map(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const raster::RasterSpec spec = raster::default_spec(cfg, o.pixels);
  const double reach = std::hypot(spec.x_max, spec.y_max);
  const double radius = o.radius > 0.0 ? o.radius : std::max(geometry::auto_radius(cfg), 2.0 * reach);
  RandomStream rng(o.seed, 0);
  const auto real = geometry::sample_network(cfg, radius, rng);

  const auto write = [&](const raster::Raster& r, const std::string& stem) {
    CsvFile txt(o, stem + ".txt", out);
    raster::write_text(txt.stream(), r);
    CsvFile csv(o, stem + ".csv", out);
    raster::write_csv(csv.stream(), r);
  };
  const raster::Raster a = raster::association_map(real, spec, selection::parse_rule(o.rule), cfg);
  write(a, "map_a");

  CsvFile summary(o, "map.csv", out);
  summary.stream() << "rule_a,rule_b,mismatch,invalid_a,invalid_b\n";
  Row r;
  r << o.rule << o.rule_b;
  if (o.rule_b.empty()) {
    r << kMissing << static_cast<double>(a.invalid) << kMissing;
  } else {
    const raster::Raster b = raster::association_map(real, spec, selection::parse_rule(o.rule_b), cfg);
    write(b, "map_b");
    const double m = raster::region_mismatch(a, b);
    r << m << static_cast<double>(a.invalid) << static_cast<double>(b.invalid);
    out << "mismatch " << std::setprecision(15) << m << '\n';
  }
  summary.stream() << r.str();
  return kOk;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const Engines e = parse_engine(o.engine);
  if (e.analytic && e.mc) throw CLI::ValidationError("--engine", "optimize takes analytic or mc");
  if (o.tier < 1 || o.tier > cfg.size()) throw CLI::ValidationError("--tier", "tier index out of range");
  const std::size_t varied = o.tier - 1;
  const std::size_t reference = varied == 0 ? 1 : 0;
  if (cfg.size() < 2) throw CLI::ValidationError("--config", "a bias sweep needs at least two tiers");

  optimizer::Metric metric;
  if (o.metric == "coverage") metric = optimizer::Metric::coverage_db(o.threshold);
  else if (o.metric == "rate") metric = optimizer::Metric::rate(o.threshold);
  else throw CLI::ValidationError("--metric", "expected coverage or rate");
  optimizer::Engine engine;
  if (e.mc) {
    engine.kind = optimizer::Engine::Kind::monte_carlo;
    engine.plan = make_plan(o, cfg);
  }
  const auto grid = parse_grid(o.bias_grid, "--bias-grid", true);
  const auto s = optimizer::sweep_bias(cfg, metric, grid, engine, varied, reference);

  CsvFile csv(o, "sweep.csv", out);
  csv.stream() << "bias_ratio,metric,stderr\n";
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    Row r;
    r << s.grid[i] << s.values[i].value << s.values[i].std_error;
    csv.stream() << r.str();
  }
  CsvFile cand(o, "sweep_candidates.csv", out);
  cand.stream() << "label,bias_ratio,metric,stderr\n";
  for (const auto& [label, ratio, ev] :
       {std::tuple{std::string("optimum"), s.best_ratio, s.values[s.argmax]},
        std::tuple{std::string("sqrt"), s.sqrt_ratio, s.sqrt_value},
        std::tuple{std::string("linear"), s.linear_ratio, s.linear_value}}) {
    Row r;
    r << label << ratio << ev.value << ev.std_error;
    cand.stream() << r.str();
    out << r.str();
  }
  return kOk;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const auto rule = selection::parse_rule(o.rule);
  const NetworkConfig acfg = analytic_config(cfg, rule);
  const auto grid = parse_grid(o.grid, "--grid");
  const auto rhos = parse_grid(o.rho_grid, "--rho-grid");

  montecarlo::SimPlan plan = make_plan(o, cfg);
  plan.thresholds_db = grid;
  plan.rates = rhos;
  const auto mc = montecarlo::simulate(plan);
  const auto rate = analytic::rate_curve(rhos, acfg);

  CsvFile csv(o, "validate.csv", out);
  csv.stream() << "quantity,threshold,analytic,mc,mc_stderr,allowed,pass\n";
  std::size_t breaches = 0;
  const auto check = [&](const std::string& what, double x, double analytic_value,
                         const montecarlo::Estimate& est) {
    const double allowed = std::max(3.0 * est.std_error, o.tolerance);
    const bool pass = std::abs(analytic_value - est.mean) <= allowed;
    if (!pass) ++breaches;
    Row r;
    r << what << x << analytic_value << est.mean << est.std_error << allowed << std::string(pass ? "1" : "0");
    csv.stream() << r.str();
  };
  for (std::size_t i = 0; i < grid.size(); ++i)
    check("coverage", grid[i], analytic::coverage(db_to_linear(grid[i]), acfg).total, mc.coverage[i]);
  for (std::size_t i = 0; i < rhos.size(); ++i)
    check("rate", rhos[i], rate.points[i].total, mc.rate_coverage[i]);
  out << (breaches ? "FAIL " : "PASS ") << breaches << " of " << grid.size() + rhos.size()
      << " points outside tolerance\n";
  return breaches ? kToleranceBreach : kOk;
}

int cmd_percentile(const Options& o, std::ostream& out) {
  const NetworkConfig cfg = load_config(o.config);
  const NetworkConfig acfg = analytic_config(cfg, selection::parse_rule(o.rule));
  const double rho = optimizer::percentile_rate(acfg, o.p);
  CsvFile csv(o, "percentile.csv", out);
  csv.stream() << "p,rho\n";
  Row r;
  r << o.p << rho;
  csv.stream() << r.str();
  out << r.str();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coverage and rate analysis for multi-antenna heterogeneous cellular networks"};
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<int(const Options&, std::ostream&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", o.config, "Network description (JSON)")->required();
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--seed", o.seed, "Master seed for the MC engine");
    sub->add_option("--realizations", o.realizations, "MC realizations")->check(CLI::PositiveNumber);
    sub->add_option("--engine", o.engine, "analytic | mc | both");
    sub->add_option("--radius", o.radius, "Simulation window radius (0 = automatic)");
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
    sub->add_option("--rule", o.rule, "biased:explicit | biased:sqrt | biased:linear | mean-sinr | max-power");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  add("coverage", "SINR coverage curve", cmd_coverage)
      ->add_option("--grid", o.grid, "start_db:stop_db:points");
  add("rate", "Rate coverage curve", cmd_rate)->add_option("--rho-grid", o.rho_grid, "start:stop:points");
  add("associate", "Association probabilities and mean loads", cmd_associate);
  {
    CLI::App* sub = add("map", "Association raster for one realization", cmd_map);
    sub->add_option("--pixels", o.pixels, "Raster side length")->check(CLI::PositiveNumber);
    sub->add_option("--rule-b", o.rule_b, "Second rule for the mismatch ('' to skip)");
  }
  {
    CLI::App* sub = add("optimize", "Bias ratio sweep", cmd_optimize);
    sub->add_option("--metric", o.metric, "coverage | rate");
    sub->add_option("--threshold", o.threshold, "SINR threshold in dB, or rate threshold");
    sub->add_option("--bias-grid", o.bias_grid, "lo:hi:points, log-spaced");
    sub->add_option("--tier", o.tier, "1-based tier whose bias varies");
  }
  {
    CLI::App* sub = add("validate", "Analytic vs MC agreement report", cmd_validate);
    sub->add_option("--grid", o.grid, "start_db:stop_db:points");
    sub->add_option("--rho-grid", o.rho_grid, "start:stop:points");
    sub->add_option("--tolerance", o.tolerance, "Absolute tolerance floor");
  }
  add("percentile", "Rate reached by a fraction p of users", cmd_percentile)
      ->add_option("--p", o.p, "Coverage fraction in (0, 1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) return handler(o, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace hetnet::cli
