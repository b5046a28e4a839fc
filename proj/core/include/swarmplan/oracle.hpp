#pragma once

#include <limits>
#include <span>
#include <vector>

#include "swarmplan/swarm_planner.hpp"

namespace swarmplan {

/// Hard caps on the exhaustive solver; enumeration is exponential.
inline constexpr int kOracleMaxPoints = 8;
inline constexpr int kOracleMaxUavs = 3;

struct OracleResult {
  double optimal_cost_j = std::numeric_limits<double>::infinity();
  std::vector<Trajectory> assignment;  // one per UAV, root-only allowed
  bool feasible = false;               // some assignment met every budget
  bool exhausted = false;  // enumeration truncated (never within the caps)
};

/// Exact minimum of the fleet-wide tree-cost objective over every ordered
/// partition of the points and, per group, every labeled rooted tree.
/// Budgets are taken from the fleet as-is. Throws InstanceTooLargeError
/// beyond the caps.
OracleResult exact_plan(const Scenario& sc, const std::vector<UavSpec>& fleet,
                        const Environment& env, const RadioConfig& radio,
                        std::span<const double> shadow_db = {});

/// Repackages an oracle assignment so it can flow through validate_plan,
/// metrics, and the plan serialization like any planner output.
PlanResult oracle_as_plan(const OracleResult& oracle,
                          const std::vector<UavSpec>& fleet);

}  // namespace swarmplan
