/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "absfsim/coalition.hpp"
#include "absfsim/radio.hpp"

namespace absfsim::harness {

struct Scheme {
  enum class Kind { kProposed, kFixedRate, kNoAbsf };
  Kind kind = Kind::kProposed;
  double alpha = 0.0;  // FixedRate only

  std::string label() const;
};

/// Parses "proposed,fixed:0.1,fixed:0.3,noabsf"; throws ConfigError on
/// malformed entries.
std::vector<Scheme> parse_schemes(const std::string& spec);
std::vector<Scheme> default_schemes();

/// Everything the pipeline derives from one drop, shared across schemes.
struct DropAnalysis {
  radio::PathGainMatrix gains;
  radio::SinrReport report;
  std::vector<absf::MutedRateRequirement> requirements;  // one per victim
  coalition::VictimSets victim_sets;
  std::vector<coalition::Coalition> coalitions;
  bool least_norm_fallback = false;
};

DropAnalysis analyze_drop(const Scenario& scenario);

/// Muting plan for one scheme on an analyzed drop. Proposed runs the
/// rate/coalition pipeline; FixedRate assigns its alpha to every aggressor
/// HeNB (still coalition-aligned); NoAbsf blanks nothing.
absf::MutingPlan plan_for_scheme(const DropAnalysis& drop, const Scheme& scheme,
                                 const absf::FrameConfig& frame,
                                 bool distinct_offsets);

/// Post-muting SINR per MUE: S / (I*(1 - r) + sigma) where r is the
/// effective blanked fraction shared by the MUE's aggressors (0 when it has
/// none). Non-victims keep their pre-muting SINR.
std::vector<double> post_muting_sinr(const radio::SinrReport& report,
                                     const absf::MutingPlan& plan,
                                     const absf::FrameConfig& frame);

struct ThroughputScores {
  std::vector<double> mue_kbps;
  std::vector<double> fue_kbps;
};

/// Shannon-rate model. MUE m splits the band equally with its peers and
/// sees blank-mode SINR during the fraction of subframes in which all of
/// its aggressors blank simultaneously. FUE f runs full band at its normal
/// SINR, scaled by its serving HeNB's active fraction.
ThroughputScores score_throughput(const radio::SinrReport& report,
                                  const absf::MutingPlan& plan,
                                  const absf::FrameConfig& frame,
                                  double bandwidth_hz);

struct OutageResult {
  double outage = 0.0;              // below-threshold fraction of all MUEs
  double infeasible_fraction = 0.0; // noise-limited victims / all MUEs
};

/// Fraction of MUEs whose post-muting SINR stays below gamma0. When
/// exclude_infeasible is set (the Proposed scheme), noise-limited victims
/// leave the numerator and are reported separately.
OutageResult score_outage(const radio::SinrReport& report,
                          const std::vector<double>& post_sinr_linear,
                          const std::vector<absf::MutedRateRequirement>& requirements,
                          bool exclude_infeasible);

/// Per-(scheme, step) aggregates over runs.
struct StepRow {
  std::string scheme;
  int step = 0;
  double sinr_pre_db_mean = 0.0, sinr_pre_db_std = 0.0;
  double sinr_post_db_mean = 0.0, sinr_post_db_std = 0.0;
  double required_rate_mean = 0.0, required_rate_std = 0.0;
  double applied_rate_mean = 0.0, applied_rate_std = 0.0;
  double mue_kbps_mean = 0.0, mue_kbps_std = 0.0;
  double fue_kbps_mean = 0.0, fue_kbps_std = 0.0;
  double outage_mean = 0.0, outage_std = 0.0;
  double infeasible_mean = 0.0;
  int n = 0;
};

struct RunFailure {
  int run = 0;
  int step = 0;
  std::string scheme;
  std::string what;
};

struct MetricsReport {
  ScenarioConfig config;
  std::vector<Scheme> schemes;
  std::vector<StepRow> rows;  // ordered by (scheme, step)
  std::vector<RunFailure> failures;
  int completed_runs = 0;

  const StepRow& row(const std::string& scheme, int step) const;
};

/// Chapter-4 style experiment: per run, drop a scenario and score every
/// scheme on the shared drop at steps 0..num_steps (step 0 is the initial
/// geometry). Deterministic for a given config regardless of worker count.
MetricsReport run_experiment(const ScenarioConfig& config,
                             const std::vector<Scheme>& schemes,
                             int workers = 0);

/// Writes muted_rate.csv, sinr.csv, mue_throughput.csv, fue_throughput.csv
/// and outage.csv with columns scheme,step,mean,stddev,n.
void write_csv_files(const MetricsReport& report, const std::string& out_dir);

/// Machine-readable run summary (config echo, seed, schemes, failures).
void write_summary(const MetricsReport& report, const std::string& path,
                   const std::string& config_path);

}  // namespace absfsim::harness
