/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "absfsim/radio.hpp"

#include <algorithm>
#include <stdexcept>

#include "absfsim/propagation.hpp"
#include "absfsim/units.hpp"

namespace absfsim::radio {

PathGainMatrix build_gain_matrix(const Scenario& scenario) {
  const auto& c = scenario.config;
  const int num_mues = c.num_mues;
  const int num_henbs = c.num_henbs;

  // Resolve nodes through their canonical ids so a permuted node list
  // produces the same matrix.
  const Node* menb = nullptr;
  std::vector<const Node*> mues(num_mues, nullptr);
  std::vector<const Node*> henbs(num_henbs, nullptr);
  std::vector<const Node*> fues(num_henbs, nullptr);
  for (const Node& n : scenario.nodes) {
    switch (n.kind) {
      case NodeKind::kMenb:
        menb = &n;
        break;
      case NodeKind::kMue:
        mues.at(n.id - scenario.mue_id(0)) = &n;
        break;
      case NodeKind::kHenb:
        henbs.at(n.id - scenario.henb_id(0)) = &n;
        break;
      case NodeKind::kFue:
        fues.at(n.id - scenario.fue_id(0)) = &n;
        break;
    }
  }
  if (menb == nullptr) throw std::logic_error("scenario has no MeNB");

  PathGainMatrix gains;
  gains.num_mues = num_mues;
  gains.num_henbs = num_henbs;
  const int receivers = num_mues + num_henbs;
  gains.serving_gain.resize(receivers);
  gains.macro_gain.resize(receivers);
  gains.cross_gain.assign(receivers, std::vector<double>(num_henbs));
  gains.noise_mw.assign(receivers,
                        dbm_to_mw(propagation::noise_power_dbm(c)));

  const int run = scenario.run_index;
  for (int m = 0; m < num_mues; ++m) {
    const Node& rx = *mues[m];
    gains.macro_gain[m] =
        propagation::path_gain(*menb, rx, c, run).total_gain_linear;
    gains.serving_gain[m] = gains.macro_gain[m];
    for (int f = 0; f < num_henbs; ++f)
      gains.cross_gain[m][f] =
          propagation::path_gain(*henbs[f], rx, c, run).total_gain_linear;
  }
  for (int k = 0; k < num_henbs; ++k) {
    const int row = num_mues + k;
    const Node& rx = *fues[k];
    gains.macro_gain[row] =
        propagation::path_gain(*menb, rx, c, run).total_gain_linear;
    for (int f = 0; f < num_henbs; ++f)
      gains.cross_gain[row][f] =
          propagation::path_gain(*henbs[f], rx, c, run).total_gain_linear;
    gains.serving_gain[row] = gains.cross_gain[row][k];
  }
  return gains;
}

SinrReport compute_sinr(const PathGainMatrix& gains, const TxPowers& powers,
                        double gamma0_db, double aggressor_epsilon) {
  const int num_mues = gains.num_mues;
  const int num_henbs = gains.num_henbs;
  const double menb_mw = dbm_to_mw(powers.menb_dbm);
  const double henb_mw = dbm_to_mw(powers.henb_dbm);

  SinrReport report;
  report.gamma0_linear = db_to_linear(gamma0_db);
  report.signal_mw.resize(num_mues);
  report.eta_mw.resize(num_mues);
  report.gamma_linear.resize(num_mues);
  report.gamma_db.resize(num_mues);
  report.interference_mw.assign(num_mues, std::vector<double>(num_henbs));
  report.f_matrix.assign(num_mues, std::vector<double>(num_henbs));
  report.b_vector.resize(num_mues);

  for (int m = 0; m < num_mues; ++m) {
    const double signal = gains.macro_gain[m] * menb_mw;
    double interference = 0.0;
    for (int f = 0; f < num_henbs; ++f) {
      const double mw = henb_mw * gains.cross_gain[m][f];
      report.interference_mw[m][f] = mw;
      interference += mw;
      report.f_matrix[m][f] =
          gains.cross_gain[m][f] * report.gamma0_linear / gains.macro_gain[m];
    }
    const double eta = interference + gains.noise_mw[m];
    report.signal_mw[m] = signal;
    report.eta_mw[m] = eta;
    report.gamma_linear[m] = signal / eta;
    report.gamma_db[m] = linear_to_db(report.gamma_linear[m]);
    report.b_vector[m] =
        report.gamma0_linear * gains.noise_mw[m] / gains.macro_gain[m];
    if (report.gamma_linear[m] < report.gamma0_linear)
      report.victims.push_back(m);
  }

  report.fue_gamma_linear.resize(num_henbs);
  report.fue_gamma_db.resize(num_henbs);
  for (int k = 0; k < num_henbs; ++k) {
    const int row = num_mues + k;
    const double signal = gains.serving_gain[row] * henb_mw;
    double denom = gains.macro_gain[row] * menb_mw + gains.noise_mw[row];
    for (int f = 0; f < num_henbs; ++f)
      if (f != k) denom += henb_mw * gains.cross_gain[row][f];
    report.fue_gamma_linear[k] = signal / denom;
    report.fue_gamma_db[k] = linear_to_db(report.fue_gamma_linear[k]);
  }

  report.aggressors = detect_aggressors(report, aggressor_epsilon);
  return report;
}

std::vector<std::vector<int>> detect_aggressors(const SinrReport& report,
                                                double epsilon) {
  if (epsilon < 0.0)
    throw std::invalid_argument("detect_aggressors: epsilon must be >= 0");
  const int num_mues = static_cast<int>(report.gamma_linear.size());
  std::vector<std::vector<int>> aggressors(num_mues);
  for (int m : report.victims) {
    const auto& contributions = report.interference_mw[m];
    const int num_henbs = static_cast<int>(contributions.size());
    double total = 0.0;
    int strongest = -1;
    double strongest_mw = 0.0;
    for (int f = 0; f < num_henbs; ++f) {
      total += contributions[f];
      if (contributions[f] > strongest_mw) {
        strongest_mw = contributions[f];
        strongest = f;
      }
      if (contributions[f] > epsilon * report.eta_mw[m])
        aggressors[m].push_back(f);
    }
    // A victim with interference must have someone accountable; keep the
    // dominant interferer when the fractional cut filtered everything.
    if (aggressors[m].empty() && total > 0.0 && strongest >= 0)
      aggressors[m].push_back(strongest);
  }
  return aggressors;
}

}  // namespace absfsim::radio
