/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <vector>

#include "absfsim/radio.hpp"

namespace absfsim::absf {

struct FrameConfig {
  int num_subframes = 10;       // N_S per radio frame
  double subframe_ms = 1.0;
  int num_resource_blocks = 50; // N_RB at 10 MHz
};

struct MutedRateRequirement {
  int mue = -1;
  double alpha = 0.0;    // in [0, 1]
  bool feasible = true;  // false when no alpha in [0,1] reaches gamma0
};

using Bitmap = std::vector<bool>;

inline int popcount(const Bitmap& bitmap) {
  int n = 0;
  for (bool b : bitmap) n += b ? 1 : 0;
  return n;
}

/// Per-HeNB muting decisions for one drop.
struct MutingPlan {
  std::vector<double> alpha_per_henb;   // required rate after the max rule
  std::vector<Bitmap> bitmap_per_henb;  // true = blanked subframe
  std::vector<int> coalition_per_henb;  // -1 when not an aggressor

  double effective_rate(int henb, const FrameConfig& frame) const {
    return static_cast<double>(popcount(bitmap_per_henb[henb])) /
           frame.num_subframes;
  }
};

/// Smallest alpha in [0,1] with S / (I*(1-alpha) + sigma) >= gamma0:
/// alpha* = max(0, 1 - (S/gamma0 - sigma)/I). Values above 1 clamp to 1
/// with feasible=false. A noise-limited victim with I = 0 gets alpha = 0,
/// feasible=false (muting cannot help it).
MutedRateRequirement required_rate_closed_form(const radio::SinrReport& report,
                                               int mue);

struct LeastNormResult {
  std::vector<double> x;
  double condition = 0.0;
  bool ok = false;
};

/// Minimum-norm solution x = A^T (A A^T)^-1 B of the underdetermined system
/// A x = B (A full row rank). Fails (ok=false) when A A^T is singular or its
/// condition number exceeds 1e12.
LeastNormResult least_norm_solve(const std::vector<std::vector<double>>& a,
                                 const std::vector<double>& b);

/// Matrix-form route to the per-victim rates. Row m of the system reads
/// (sum_f F(m,f) P(F_f)) * alpha_m = sum_f F(m,f) P(F_f) + b(m) - P(m),
/// assembled for the victim rows only and solved via least_norm_solve, then
/// clamped to [0,1]. Falls back to the closed form per victim when the
/// system is ill-conditioned; `used_fallback` reports that.
std::vector<MutedRateRequirement> required_rates_least_norm(
    const radio::SinrReport& report, const radio::TxPowers& powers,
    bool* used_fallback = nullptr);

/// alpha_F(f) = max of alpha_m over the victims in henb_victims[f]; 0 when
/// the set is empty.
std::vector<double> aggregate_per_henb(
    const std::vector<MutedRateRequirement>& requirements,
    const std::vector<std::vector<int>>& henb_victims);

/// ceil(alpha * N_S) blanked subframes, contiguous from `offset` (wrapping),
/// so the quantized rate never falls below alpha.
Bitmap quantize_pattern(double alpha, const FrameConfig& frame, int offset = 0);

}  // namespace absfsim::absf
