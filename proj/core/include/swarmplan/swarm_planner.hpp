#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swarmplan/jmst.hpp"

namespace swarmplan {

struct PlannerConfig {
  double lambda = 2.0;
  /// Budget increment per round. Non-positive requests the default: 1% of
  /// the smallest finite budget, or 100 J when every budget is unlimited.
  double delta_e_j = 0.0;
  /// Cap on non-root vertices per tree (forwarded to the j-MST step).
  int max_vertices = -1;
  /// Optional per-UAV budget replacing each UavSpec's own (size K or empty).
  std::vector<double> budget_overrides;

  void validate() const;
};

struct PlanResult {
  std::vector<Trajectory> trajectories;  // one per UAV, in fleet order
  std::vector<double> cost_j;            // tree cost per UAV
  std::vector<double> budget_j;          // resolved budgets (sentinels included)
  bool feasible = false;
  std::vector<int> uncovered_points;     // non-empty iff not feasible
  /// Budget-grid rounds the round-doubling schedule ran through (rounds the
  /// planner can prove are no-ops are counted but not executed).
  std::int64_t iterations = 0;
  double wall_time_s = 0.0;
};

/// Joint trajectory assignment for the whole fleet. UAVs are served in
/// ascending budget order under a shared budget that grows by delta_e each
/// round; each UAV greedily claims a budget-constrained tree on the points
/// nobody has permanently claimed yet, and retires (fixing its trajectory
/// for good) once the next round's budget would exceed its own.
///
/// Infeasible instances (every UAV retired with points still unclaimed) are
/// returned with feasible = false and the leftovers in uncovered_points.
PlanResult plan(const Scenario& sc, const std::vector<UavSpec>& fleet,
                const Environment& env, const RadioConfig& radio,
                const PlannerConfig& cfg = {},
                std::span<const double> shadow_db = {});

struct FeasibilityReport {
  bool coverage_ok = false;
  bool disjoint_ok = false;
  bool budgets_ok = false;
  bool costs_match = false;
  std::vector<int> missing_points;
  std::vector<int> duplicated_points;
  std::vector<int> over_budget_uavs;
  double max_cost_mismatch_rel = 0.0;

  bool ok() const {
    return coverage_ok && disjoint_ok && budgets_ok && costs_match;
  }
};

/// Independently re-checks a plan: full coverage, pairwise disjoint
/// trajectories (root excepted), and per-UAV budgets, with every cost
/// recomputed from the raw energy and radio models rather than the stored
/// cumulative energies. Discrepancies are reported, never repaired.
FeasibilityReport validate_plan(const Scenario& sc,
                                const std::vector<UavSpec>& fleet,
                                const Environment& env,
                                const RadioConfig& radio,
                                const PlanResult& result,
                                std::span<const double> shadow_db = {});

}  // namespace swarmplan
