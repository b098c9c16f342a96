/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

#include "absfsim/config.hpp"
#include "absfsim/geometry.hpp"

namespace absfsim {

enum class NodeKind { kMenb, kHenb, kMue, kFue };

std::string to_string(NodeKind kind);

struct Node {
  int id = -1;
  NodeKind kind = NodeKind::kMue;
  Vec2 position;
  bool indoor = false;
  int serving = -1;  // MUE -> MeNB id, FUE -> its HeNB id, stations -> -1
};

/// One Monte-Carlo drop: immutable after construction.
///
/// Node ids are assigned canonically: MeNB = 0, MUEs 1..M, HeNBs M+1..M+F,
/// FUEs M+F+1..M+2F, with FUE (M+F+1+j) served by HeNB (M+1+j).
struct Scenario {
  ScenarioConfig config;
  std::vector<Node> nodes;
  int run_index = 0;
  int step_index = 0;

  int menb_id() const { return 0; }
  int mue_id(int m) const { return 1 + m; }
  int henb_id(int f) const { return 1 + config.num_mues + f; }
  int fue_id(int f) const { return 1 + config.num_mues + config.num_henbs + f; }

  const Node& node_by_id(int id) const;
};

namespace deployment {

/// Drops the MeNB at the origin, MUEs and HeNBs uniformly over the macro
/// disc, and one FUE per HeNB inside its apartment footprint. Deterministic
/// given (config.rng_seed, run_index).
Scenario generate_scenario(const ScenarioConfig& config, int run_index);

/// Moves every MUE that has a HeNB within flee_range away from the nearest
/// such HeNB: displacement magnitude uniform in [0, 2*step_distance] (mean
/// step_distance), direction uniform within +-90 degrees of the away
/// direction, shortened so the MUE stays inside the macro disc. MUE indoor
/// flags are refreshed against apartment footprints afterwards.
Scenario advance_step(const Scenario& scenario);

/// True iff `point` lies inside some HeNB apartment footprint.
bool inside_any_apartment(const Scenario& scenario, const Vec2& point);

/// One node per line: id kind x y indoor serving.
std::string format_nodes(const Scenario& scenario);

}  // namespace deployment

}  // namespace absfsim
