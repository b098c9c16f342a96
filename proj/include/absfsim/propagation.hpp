/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>

#include "absfsim/config.hpp"
#include "absfsim/rng.hpp"
#include "absfsim/scenario.hpp"

namespace absfsim::propagation {

enum class LinkKind { kMacro, kFemto };

struct LinkLoss {
  double pathloss_db = 0.0;
  double shadowing_db = 0.0;
  double tx_antenna_gain_dbi = 0.0;
  double rx_antenna_gain_dbi = 0.0;
  double total_gain_linear = 0.0;

  double total_gain_db() const {
    return -pathloss_db - shadowing_db + tx_antenna_gain_dbi +
           rx_antenna_gain_dbi;
  }
};

/// Urban macro downlink loss: 15.3 + 37.6*log10(D), plus the outdoor wall
/// penetration loss when the receiver is indoors. D in meters, > 0.
double macro_pathloss(double distance_m, bool rx_indoor, double wall_loss_db);

/// Femto downlink loss, indoors or outdoors: 127 + 30*log10(d/1000).
/// d in meters, > 0.
double femto_pathloss(double distance_m);

/// Zero-mean log-normal shadowing sample in dB; sigma chosen by link kind.
double sample_shadowing(LinkKind kind, const ScenarioConfig& config, Rng& rng);

/// Shadowing frozen per (seed, run, tx, rx): the same link always sees the
/// same fade regardless of step or evaluation order.
double shadowing_for_link(std::uint64_t rng_seed, int run_index, int tx_id,
                          int rx_id, LinkKind kind,
                          const ScenarioConfig& config);

/// Full link budget from a station (MeNB or HeNB) to a terminal (MUE or
/// FUE), with the frozen shadowing for this (run, link). Distances are
/// floored at config.min_link_distance_m.
LinkLoss path_gain(const Node& tx, const Node& rx, const ScenarioConfig& config,
                   int run_index);

/// Receiver noise floor: thermal density + 10*log10(bandwidth) + noise figure.
double noise_power_dbm(const ScenarioConfig& config);

}  // namespace absfsim::propagation
