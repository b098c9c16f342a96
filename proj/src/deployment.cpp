/*
 * Copyright (c) 2026
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "absfsim/rng.hpp"
#include "absfsim/scenario.hpp"

namespace absfsim {

std::string to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kMenb: return "MeNB";
    case NodeKind::kHenb: return "HeNB";
    case NodeKind::kMue: return "MUE";
    case NodeKind::kFue: return "FUE";
  }
  return "?";
}

const Node& Scenario::node_by_id(int id) const {
  for (const Node& n : nodes)
    if (n.id == id) return n;
  throw std::logic_error("unknown node id " + std::to_string(id));
}

namespace deployment {

namespace {

Vec2 uniform_disc(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.next_double());
  const double theta = 2.0 * std::numbers::pi * rng.next_double();
  return {r * std::cos(theta), r * std::sin(theta)};
}

bool inside_footprint(const Vec2& point, const Vec2& henb, double size) {
  const double half = size / 2.0;
  return std::abs(point.x - henb.x) <= half &&
         std::abs(point.y - henb.y) <= half;
}

}  // namespace

bool inside_any_apartment(const Scenario& scenario, const Vec2& point) {
  const auto& c = scenario.config;
  for (int f = 0; f < c.num_henbs; ++f) {
    const Node& henb = scenario.nodes[scenario.henb_id(f)];
    if (inside_footprint(point, henb.position, c.apartment_size_m)) return true;
  }
  return false;
}

Scenario generate_scenario(const ScenarioConfig& config, int run_index) {
  validate_config(config);
  if (run_index < 0 || run_index >= config.num_runs)
    throw std::out_of_range("run_index " + std::to_string(run_index) +
                            " out of range [0, " +
                            std::to_string(config.num_runs) + ")");

  Scenario scenario;
  scenario.config = config;
  scenario.run_index = run_index;
  scenario.step_index = 0;
  scenario.nodes.resize(1 + config.num_mues + 2 * config.num_henbs);

  scenario.nodes[0] = Node{0, NodeKind::kMenb, {0.0, 0.0}, false, -1};

  for (int m = 0; m < config.num_mues; ++m) {
    Rng rng(derive_seed(config.rng_seed,
                        {stream::kMuePlacement, static_cast<std::uint64_t>(run_index),
                         static_cast<std::uint64_t>(m)}));
    const int id = scenario.mue_id(m);
    scenario.nodes[id] =
        Node{id, NodeKind::kMue, uniform_disc(rng, config.macro_radius_m),
             false, scenario.menb_id()};
  }

  for (int f = 0; f < config.num_henbs; ++f) {
    Rng rng(derive_seed(config.rng_seed,
                        {stream::kHenbPlacement, static_cast<std::uint64_t>(run_index),
                         static_cast<std::uint64_t>(f)}));
    const int id = scenario.henb_id(f);
    scenario.nodes[id] =
        Node{id, NodeKind::kHenb, uniform_disc(rng, config.macro_radius_m),
             true, -1};
  }

  // One FUE per HeNB, uniform inside its apartment footprint; kept inside
  // the macro disc by rejection, collapsing onto the HeNB if the footprint
  // barely overlaps the disc.
  for (int f = 0; f < config.num_henbs; ++f) {
    Rng rng(derive_seed(config.rng_seed,
                        {stream::kFuePlacement, static_cast<std::uint64_t>(run_index),
                         static_cast<std::uint64_t>(f)}));
    const Vec2 henb = scenario.nodes[scenario.henb_id(f)].position;
    const double half = config.apartment_size_m / 2.0;
    Vec2 pos = henb;
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vec2 candidate{henb.x + rng.uniform(-half, half),
                     henb.y + rng.uniform(-half, half)};
      if (candidate.norm() <= config.macro_radius_m) {
        pos = candidate;
        break;
      }
    }
    const int id = scenario.fue_id(f);
    scenario.nodes[id] =
        Node{id, NodeKind::kFue, pos, true, scenario.henb_id(f)};
  }

  // Indoor flag for MUEs that happen to start inside an apartment.
  for (int m = 0; m < config.num_mues; ++m) {
    Node& mue = scenario.nodes[scenario.mue_id(m)];
    mue.indoor = inside_any_apartment(scenario, mue.position);
  }
  return scenario;
}

Scenario advance_step(const Scenario& scenario) {
  const auto& c = scenario.config;
  if (scenario.step_index >= c.num_steps)
    throw std::out_of_range("step budget exhausted: step_index " +
                            std::to_string(scenario.step_index) + " of " +
                            std::to_string(c.num_steps));

  Scenario next = scenario;
  next.step_index = scenario.step_index + 1;

  for (int m = 0; m < c.num_mues; ++m) {
    Node& mue = next.nodes[next.mue_id(m)];

    // Nearest HeNB within flee range; ties break to the lowest index.
    int target = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int f = 0; f < c.num_henbs; ++f) {
      const double d =
          distance(mue.position, next.nodes[next.henb_id(f)].position);
      if (d <= c.flee_range_m && d < best) {
        best = d;
        target = f;
      }
    }
    if (target < 0) continue;  // no interferer close enough to flee

    Rng rng(derive_seed(c.rng_seed,
                        {stream::kDisplacement,
                         static_cast<std::uint64_t>(scenario.run_index),
                         static_cast<std::uint64_t>(next.step_index),
                         static_cast<std::uint64_t>(m)}));
    const double magnitude = rng.uniform(0.0, 2.0 * c.step_distance_m);
    const Vec2 henb = next.nodes[next.henb_id(target)].position;
    const Vec2 away = mue.position - henb;
    double base_angle;
    if (away.norm() == 0.0) {
      base_angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    } else {
      base_angle = std::atan2(away.y, away.x);
    }
    // Within +-90 degrees of straight away, so the distance to the fled
    // HeNB can only grow; shortening the move for the disc boundary keeps
    // that property.
    const double angle =
        base_angle +
        rng.uniform(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    const Vec2 disp{magnitude * std::cos(angle), magnitude * std::sin(angle)};
    const double t = clip_to_disc(mue.position, disp, c.macro_radius_m);
    mue.position = mue.position + disp * t;
  }

  for (int m = 0; m < c.num_mues; ++m) {
    Node& mue = next.nodes[next.mue_id(m)];
    mue.indoor = inside_any_apartment(next, mue.position);
  }
  return next;
}

std::string format_nodes(const Scenario& scenario) {
  std::ostringstream os;
  os.precision(10);
  for (const Node& n : scenario.nodes) {
    os << n.id << ' ' << to_string(n.kind) << ' ' << n.position.x << ' '
       << n.position.y << ' ' << (n.indoor ? 1 : 0) << ' ' << n.serving
       << '\n';
  }
  return os.str();
}

}  // namespace deployment
}  // namespace absfsim
