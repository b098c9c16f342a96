/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "absfsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace absfsim {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an unsigned integer, got '" + value +
                      "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

struct KeyHandler {
  std::function<void(ScenarioConfig&, const std::string&, const std::string&)>
      set;
  std::function<std::string(const ScenarioConfig&)> get;
};

#define DOUBLE_KEY(field)                                              \
  KeyHandler {                                                         \
    [](ScenarioConfig& c, const std::string& k, const std::string& v) \
        { c.field = parse_double(k, v); },                             \
    [](const ScenarioConfig& c) { return format_double(c.field); }     \
  }
#define INT_KEY(field)                                                 \
  KeyHandler {                                                         \
    [](ScenarioConfig& c, const std::string& k, const std::string& v) \
        { c.field = parse_int(k, v); },                                \
    [](const ScenarioConfig& c) { return std::to_string(c.field); }    \
  }
#define BOOL_KEY(field)                                                \
  KeyHandler {                                                         \
    [](ScenarioConfig& c, const std::string& k, const std::string& v) \
        { c.field = parse_bool(k, v); },                               \
    [](const ScenarioConfig& c) {                                      \
      return c.field ? std::string("true") : std::string("false");     \
    }                                                                  \
  }

const std::vector<std::pair<std::string, KeyHandler>>& key_table() {
  static const std::vector<std::pair<std::string, KeyHandler>> table = {
      {"macro_radius", DOUBLE_KEY(macro_radius_m)},
      {"num_mues", INT_KEY(num_mues)},
      {"num_henbs", INT_KEY(num_henbs)},
      {"menb_power", DOUBLE_KEY(menb_power_dbm)},
      {"henb_power", DOUBLE_KEY(henb_power_dbm)},
      {"menb_antenna_gain", DOUBLE_KEY(menb_antenna_gain_dbi)},
      {"mue_antenna_gain", DOUBLE_KEY(mue_antenna_gain_dbi)},
      {"henb_antenna_gain", DOUBLE_KEY(henb_antenna_gain_dbi)},
      {"bandwidth", DOUBLE_KEY(bandwidth_hz)},
      {"thermal_noise_density", DOUBLE_KEY(thermal_noise_density_dbm_hz)},
      {"noise_figure", DOUBLE_KEY(noise_figure_db)},
      {"sinr_threshold", DOUBLE_KEY(sinr_threshold_db)},
      {"outdoor_wall_loss", DOUBLE_KEY(outdoor_wall_loss_db)},
      {"shadow_std_macro", DOUBLE_KEY(shadow_std_macro_db)},
      {"shadow_std_femto", DOUBLE_KEY(shadow_std_femto_db)},
      {"num_runs", INT_KEY(num_runs)},
      {"num_steps", INT_KEY(num_steps)},
      {"step_distance", DOUBLE_KEY(step_distance_m)},
      {"rng_seed",
       KeyHandler{[](ScenarioConfig& c, const std::string& k,
                     const std::string& v) { c.rng_seed = parse_u64(k, v); },
                  [](const ScenarioConfig& c) {
                    return std::to_string(c.rng_seed);
                  }}},
      {"deployment.apartment_size", DOUBLE_KEY(apartment_size_m)},
      {"deployment.flee_range", DOUBLE_KEY(flee_range_m)},
      {"propagation.min_link_distance", DOUBLE_KEY(min_link_distance_m)},
      {"propagation.fue_pathloss",
       KeyHandler{[](ScenarioConfig& c, const std::string& k,
                     const std::string& v) {
                    if (v == "femto")
                      c.fue_pathloss = FuePathlossModel::kFemto;
                    else if (v == "macro")
                      c.fue_pathloss = FuePathlossModel::kMacro;
                    else
                      throw ConfigError(k + ": expected femto|macro, got '" +
                                        v + "'");
                  },
                  [](const ScenarioConfig& c) {
                    return c.fue_pathloss == FuePathlossModel::kFemto
                               ? std::string("femto")
                               : std::string("macro");
                  }}},
      {"radio.aggressor_epsilon", DOUBLE_KEY(aggressor_epsilon)},
      {"absf.solver",
       KeyHandler{[](ScenarioConfig& c, const std::string& k,
                     const std::string& v) {
                    if (v == "closed_form")
                      c.rate_solver = RateSolver::kClosedForm;
                    else if (v == "least_norm")
                      c.rate_solver = RateSolver::kLeastNorm;
                    else
                      throw ConfigError(
                          k + ": expected closed_form|least_norm, got '" + v +
                          "'");
                  },
                  [](const ScenarioConfig& c) {
                    return c.rate_solver == RateSolver::kClosedForm
                               ? std::string("closed_form")
                               : std::string("least_norm");
                  }}},
      {"frame.subframes", INT_KEY(frame_subframes)},
      {"frame.resource_blocks", INT_KEY(frame_resource_blocks)},
      {"frame.subframe_duration", DOUBLE_KEY(subframe_duration_ms)},
      {"coalition.distinct_offsets", BOOL_KEY(coalition_distinct_offsets)},
  };
  return table;
}

#undef DOUBLE_KEY
#undef INT_KEY
#undef BOOL_KEY

const KeyHandler* find_key(const std::string& key) {
  for (const auto& [name, handler] : key_table())
    if (name == key) return &handler;
  return nullptr;
}

}  // namespace

void validate_config(const ScenarioConfig& config) {
  if (!(config.macro_radius_m > 0))
    throw ConfigError("macro_radius: must be > 0");
  if (config.num_mues < 1) throw ConfigError("num_mues: must be >= 1");
  if (config.num_henbs < 0) throw ConfigError("num_henbs: must be >= 0");
  if (!(config.bandwidth_hz > 0)) throw ConfigError("bandwidth: must be > 0");
  if (config.shadow_std_macro_db < 0)
    throw ConfigError("shadow_std_macro: must be >= 0");
  if (config.shadow_std_femto_db < 0)
    throw ConfigError("shadow_std_femto: must be >= 0");
  if (config.outdoor_wall_loss_db < 0)
    throw ConfigError("outdoor_wall_loss: must be >= 0");
  if (config.num_runs < 1) throw ConfigError("num_runs: must be >= 1");
  if (config.num_steps < 0) throw ConfigError("num_steps: must be >= 0");
  if (config.step_distance_m < 0)
    throw ConfigError("step_distance: must be >= 0");
  if (!(config.apartment_size_m > 0))
    throw ConfigError("deployment.apartment_size: must be > 0");
  if (config.flee_range_m < 0)
    throw ConfigError("deployment.flee_range: must be >= 0");
  if (!(config.min_link_distance_m > 0))
    throw ConfigError("propagation.min_link_distance: must be > 0");
  if (config.aggressor_epsilon < 0)
    throw ConfigError("radio.aggressor_epsilon: must be >= 0");
  if (config.frame_subframes < 1)
    throw ConfigError("frame.subframes: must be >= 1");
  if (config.frame_resource_blocks < 1)
    throw ConfigError("frame.resource_blocks: must be >= 1");
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ScenarioConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    apply_override(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

void apply_override(ScenarioConfig& config, const std::string& key,
                    const std::string& value) {
  const KeyHandler* handler = find_key(key);
  if (handler == nullptr) throw ConfigError("unknown config key: " + key);
  handler->set(config, key, value);
}

std::map<std::string, std::string> config_to_map(const ScenarioConfig& config) {
  std::map<std::string, std::string> out;
  for (const auto& [name, handler] : key_table())
    out[name] = handler.get(config);
  return out;
}

}  // namespace absfsim
