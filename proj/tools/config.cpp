#include "config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hetnet/errors.hpp"
#include "hetnet/selection.hpp"

namespace hetnet::cli {

namespace {

using nlohmann::json;

const json& require(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(path, "missing required field");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<int>();
}

double optional_number(const json& obj, const std::string& key, double fallback, const std::string& path) {
  const auto it = obj.find(key);
  return it == obj.end() ? fallback : number(*it, path);
}

}  // namespace

NetworkConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected an object");

  NetworkConfig cfg;
  const json& tiers = require(doc, "tiers", "tiers");
  if (!tiers.is_array() || tiers.empty()) throw ConfigError("tiers", "expected a non-empty array");
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    const std::string base = "tiers[" + std::to_string(i) + "]";
    const json& t = tiers[i];
    if (!t.is_object()) throw ConfigError(base, "expected an object");
    TierConfig tier;
    tier.power = number(require(t, "power", base + ".power"), base + ".power");
    tier.density = number(require(t, "density", base + ".density"), base + ".density");
    tier.antennas = integer(require(t, "antennas", base + ".antennas"), base + ".antennas");
    tier.users_per_rb = integer(require(t, "users_per_rb", base + ".users_per_rb"), base + ".users_per_rb");
    tier.pathloss = number(require(t, "pathloss", base + ".pathloss"), base + ".pathloss");
    tier.bandwidth = optional_number(t, "bandwidth", 1.0, base + ".bandwidth");
    if (const auto b = t.find("bias"); b != t.end()) {
      if (b->is_string()) {
        const std::string name = b->get<std::string>();
        selection::BiasSource source;
        if (name == "sqrt") source = selection::BiasSource::sqrt_psi_delta;
        else if (name == "linear") source = selection::BiasSource::one_plus_psi_delta;
        else throw ConfigError(base + ".bias", "expected a number, \"sqrt\" or \"linear\"");
        if (tier.users_per_rb < 1 || tier.delta() < 1)
          throw ConfigError(base + ".users_per_rb", "must satisfy 1 <= users_per_rb <= antennas");
        tier.bias = selection::candidate_bias(source, tier.users_per_rb, tier.delta());
      } else {
        tier.bias = number(*b, base + ".bias");
      }
    }
    cfg.tiers.push_back(tier);
  }
  cfg.noise = optional_number(doc, "noise", 0.0, "noise");
  cfg.user_density = optional_number(doc, "user_density", 0.0, "user_density");
  cfg.validate();
  return cfg;
}

NetworkConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hetnet::cli
