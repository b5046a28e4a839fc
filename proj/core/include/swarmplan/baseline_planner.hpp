#pragma once

#include <cstdint>
#include <span>

#include "swarmplan/swarm_planner.hpp"

namespace swarmplan {

/// Distance-greedy baseline. Every UAV departs the base station at t = 0
/// toward a uniformly random unclaimed first target; from then on, each
/// UAV that finishes a point (arrival plus the transmit dwell) claims the
/// Euclidean-nearest unclaimed point and flies straight to it. Claims are
/// resolved event-driven by completion time, ties by UAV index, point ties
/// by lowest id.
///
/// Budgets are NOT enforced: violations only lower the feasible flag.
/// Routes come back as chain trajectories costed like any other tree.
PlanResult plan_nearest_neighbor(const Scenario& sc,
                                 const std::vector<UavSpec>& fleet,
                                 const Environment& env,
                                 const RadioConfig& radio, std::uint64_t seed,
                                 std::span<const double> shadow_db = {});

}  // namespace swarmplan
