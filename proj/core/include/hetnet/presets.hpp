#pragma once

#include "hetnet/network.hpp"

namespace hetnet::presets {

/// Two-tier network of the numerical study: lambda = [150, 300], P = [50, 10],
/// alpha = 4, N = 0, W = 1, biases sqrt(Psi/Delta). `id` in 1..7 picks the
/// antenna configuration and transmission scheme.
NetworkConfig section_vi_case(int id, double user_density = 450.0);

/// P1 = 5 P2, equal densities, Psi = [3, 2], Delta = [2, 1], biases sqrt(Psi/Delta).
NetworkConfig fig2_config(double density = 150.0);

/// One SISO tier, alpha = 4, N = 0, B = 1.
NetworkConfig single_tier_siso(double density = 1.0);

}  // namespace hetnet::presets
