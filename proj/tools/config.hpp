#pragma once

#include <filesystem>
#include <string>

#include "hetnet/network.hpp"

namespace hetnet::cli {

/// Parse the JSON network description. Throws ConfigError naming the field
/// path (e.g. "tiers[0].pathloss") and validates the result.
NetworkConfig parse_config(const std::string& text);
NetworkConfig load_config(const std::filesystem::path& path);

}  // namespace hetnet::cli
