/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <vector>

#include "absfsim/scenario.hpp"

namespace absfsim::radio {

/// Linear-domain gains from every station to every terminal. Receivers are
/// ordered MUEs first (index 0..M-1), then FUEs (index M..M+F-1); FUE k
/// is served by HeNB k. Rows are keyed by node id order, so the matrix is
/// invariant under permutations of the scenario node list.
struct PathGainMatrix {
  int num_mues = 0;
  int num_henbs = 0;
  std::vector<double> serving_gain;      // per receiver, from its own station
  std::vector<double> macro_gain;        // per receiver, from the MeNB
  std::vector<std::vector<double>> cross_gain;  // [receiver][henb]
  std::vector<double> noise_mw;          // per receiver

  int num_receivers() const { return num_mues + num_henbs; }
};

struct TxPowers {
  double menb_dbm = 46.0;
  double henb_dbm = 20.0;
};

/// SINRs and the interference bookkeeping derived from one gain matrix.
struct SinrReport {
  double gamma0_linear = 1.0;

  // Per MUE m.
  std::vector<double> signal_mw;        // G(M,m) * P(m)
  std::vector<double> eta_mw;           // interference + noise
  std::vector<double> gamma_linear;
  std::vector<double> gamma_db;
  std::vector<std::vector<double>> interference_mw;  // [mue][henb]
  std::vector<std::vector<double>> f_matrix;         // F(m,f)
  std::vector<double> b_vector;         // gamma0 * sigma_m / G(M,m)

  std::vector<int> victims;                      // MUE indices, ascending
  std::vector<std::vector<int>> aggressors;      // [mue] -> HeNB indices

  // Per FUE (normal mode: every station transmitting).
  std::vector<double> fue_gamma_linear;
  std::vector<double> fue_gamma_db;

  bool is_victim(int mue) const {
    return gamma_linear[mue] < gamma0_linear;
  }
};

/// One propagation::path_gain per (station, terminal) pair.
PathGainMatrix build_gain_matrix(const Scenario& scenario);

/// Evaluates macro and femto SINRs, the normalized interference matrix F,
/// the threshold vector b, victim flags and aggressor sets.
SinrReport compute_sinr(const PathGainMatrix& gains, const TxPowers& powers,
                        double gamma0_db, double aggressor_epsilon);

/// HeNB f aggresses victim n iff its contribution exceeds epsilon * eta_n.
/// A victim whose contributions all fall below the cut keeps its dominant
/// interferer so that some station is accountable for it.
std::vector<std::vector<int>> detect_aggressors(const SinrReport& report,
                                                double epsilon);

}  // namespace absfsim::radio
