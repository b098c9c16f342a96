/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <vector>

#include "absfsim/absf.hpp"

namespace absfsim::coalition {

/// H_f per HeNB: the victim MUEs (indices) each HeNB interferes with.
struct VictimSets {
  std::vector<std::vector<int>> henb_victims;  // sorted ascending per HeNB
};

struct Coalition {
  int id = 0;
  std::vector<int> members;          // HeNB indices, sorted
  std::vector<int> covered_victims;  // union of members' victim sets, sorted
};

/// Inverts the per-victim aggressor sets: H_f = { v : f in A_v }.
VictimSets collect_victim_sets(const std::vector<int>& victims,
                               const std::vector<std::vector<int>>& aggressors,
                               int num_henbs);

/// Partitions the aggressor HeNBs (H_f nonempty) into the connected
/// components of the graph with an edge wherever two victim sets intersect.
/// Coalitions are canonical: members sorted, list ordered by smallest
/// member, ids 0..n-1 in that order — independent of iteration order.
std::vector<Coalition> group_coalitions(const VictimSets& victim_sets);

/// Rebuilds every member's bitmap from the coalition rate (max of member
/// rates) at the coalition's shared offset, so mutually interfering HeNBs
/// blank the same subframes. With distinct_offsets, coalition blocks are
/// staggered across the frame instead of all starting at subframe 0.
absf::MutingPlan align_coalition_patterns(const std::vector<Coalition>& coalitions,
                                          const absf::MutingPlan& plan,
                                          const absf::FrameConfig& frame,
                                          bool distinct_offsets = false);

}  // namespace absfsim::coalition
