#pragma once

#include <span>
#include <utility>
#include <vector>

#include "swarmplan/swarm_planner.hpp"

namespace swarmplan {

/// Realized flight route of a trajectory: depth-first preorder from the
/// root, children in ascending point id, consecutive points flown directly
/// (tree edges are never retraced).
std::vector<int> traversal_order(const Trajectory& t);

struct UavBreakdown {
  int uav_index = -1;
  double flight_j = 0.0;
  double hover_tx_j = 0.0;
  double planning_cost_j = 0.0;  // cumulative tree cost used by the planner
  double completion_s = 0.0;     // when this UAV finishes its last point
  int points_visited = 0;
};

struct MetricsReport {
  double total_energy_j = 0.0;    // flight + hover, over realized routes
  double flight_energy_j = 0.0;
  double hover_tx_energy_j = 0.0;
  double planning_cost_j = 0.0;
  double inspection_time_s = 0.0;
  bool feasible = false;
  std::vector<UavBreakdown> per_uav;
};

/// Time until every point has been inspected once: all UAVs depart the
/// base at t = 0, arrival at each route point is the previous completion
/// plus distance over cruise speed, and completion adds the transmit dwell.
double inspection_time_s(const PlanResult& result, const Scenario& sc,
                         const std::vector<UavSpec>& fleet,
                         const RadioConfig& radio);

/// Flight energy over realized route legs plus hover-and-transmit energy
/// per visited point, with the planner's cumulative cost reported
/// alongside (the two differ for non-chain trees).
MetricsReport energy_breakdown(const PlanResult& result, const Scenario& sc,
                               const std::vector<UavSpec>& fleet,
                               const Environment& env, const RadioConfig& radio,
                               std::span<const double> shadow_db = {});

/// Right-continuous empirical CDF as sorted (value, probability) steps.
/// Throws EmptySampleError on an empty sample.
std::vector<std::pair<double, double>> empirical_cdf(
    std::span<const double> samples);

}  // namespace swarmplan
