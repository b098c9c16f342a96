/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace absfsim {

/// Raised for invalid or unparseable configuration; the message names the
/// offending key.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class RateSolver { kClosedForm, kLeastNorm };
enum class FuePathlossModel { kFemto, kMacro };

/// Full simulation configuration. Plain-text files use `key = value` lines
/// with `#` comments; extension knobs beyond the core scenario fields carry
/// a dotted module prefix (see kConfigKeys in config.cpp).
struct ScenarioConfig {
  // Geometry and node population.
  double macro_radius_m = 500.0;
  int num_mues = 10;
  int num_henbs = 40;

  // Link budget.
  double menb_power_dbm = 46.0;
  double henb_power_dbm = 20.0;
  double menb_antenna_gain_dbi = 14.0;
  double mue_antenna_gain_dbi = 0.0;
  double henb_antenna_gain_dbi = 2.2;
  double bandwidth_hz = 10e6;
  double thermal_noise_density_dbm_hz = -174.0;
  double noise_figure_db = 9.0;
  double sinr_threshold_db = 0.0;    // gamma_0
  double outdoor_wall_loss_db = 20.0;  // L_ow, 10 or 20 in the urban model
  double shadow_std_macro_db = 10.0;
  double shadow_std_femto_db = 8.0;

  // Monte-Carlo experiment.
  int num_runs = 2000;
  int num_steps = 30;
  double step_distance_m = 10.0;
  std::uint64_t rng_seed = 12345;

  // deployment.*
  double apartment_size_m = 10.0;  // square footprint side, HeNB at center
  double flee_range_m = 100.0;     // HeNBs beyond this are not fled from

  // propagation.*
  double min_link_distance_m = 0.1;
  FuePathlossModel fue_pathloss = FuePathlossModel::kFemto;

  // radio.*
  double aggressor_epsilon = 0.05;

  // absf.*
  RateSolver rate_solver = RateSolver::kClosedForm;

  // frame.*
  int frame_subframes = 10;        // N_S
  int frame_resource_blocks = 50;  // N_RB for 10 MHz
  double subframe_duration_ms = 1.0;

  // coalition.*
  bool coalition_distinct_offsets = false;
};

/// Throws ConfigError naming the first invalid field.
void validate_config(const ScenarioConfig& config);

/// Parses a key/value config file. Unknown keys are an error.
ScenarioConfig load_config_file(const std::string& path);

/// Applies one `key=value` override on top of an existing config.
void apply_override(ScenarioConfig& config, const std::string& key,
                    const std::string& value);

/// All keys with their current values, in canonical order (for echoing).
std::map<std::string, std::string> config_to_map(const ScenarioConfig& config);

}  // namespace absfsim
