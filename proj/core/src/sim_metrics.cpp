#include "swarmplan/sim_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "swarmplan/errors.hpp"

namespace swarmplan {

std::vector<int> traversal_order(const Trajectory& t) {
  std::map<int, std::vector<int>> children;
  for (const auto& [v, p] : t.parent) children[p].push_back(v);
  // Map order is ascending already; keep children ascending too.
  std::vector<int> out;
  out.reserve(t.vertex_count());
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    auto it = children.find(u);
    if (it == children.end()) continue;
    for (auto rit = it->second.rbegin(); rit != it->second.rend(); ++rit)
      stack.push_back(*rit);
  }
  return out;
}

double inspection_time_s(const PlanResult& result, const Scenario& sc,
                         const std::vector<UavSpec>& fleet,
                         const RadioConfig& radio) {
  const double tau = radio.air_time_s();
  double latest = 0.0;
  for (std::size_t k = 0; k < result.trajectories.size(); ++k) {
    const std::vector<int> route = traversal_order(result.trajectories[k]);
    const double v = fleet.at(k).ground_speed_mps;
    double clock = 0.0;
    for (std::size_t i = 1; i < route.size(); ++i) {
      clock += distance(sc.points[route[i - 1]], sc.points[route[i]]) / v + tau;
      latest = std::max(latest, clock);
    }
  }
  return latest;
}

MetricsReport energy_breakdown(const PlanResult& result, const Scenario& sc,
                               const std::vector<UavSpec>& fleet,
                               const Environment& env, const RadioConfig& radio,
                               std::span<const double> shadow_db) {
  MetricsReport report;
  report.feasible = result.feasible;
  const double tau = radio.air_time_s();

  for (std::size_t k = 0; k < result.trajectories.size(); ++k) {
    const Trajectory& t = result.trajectories[k];
    const UavSpec& uav = fleet.at(k);
    UavBreakdown row;
    row.uav_index = static_cast<int>(k);
    row.planning_cost_j = tree_cost_j(t);
    row.points_visited = t.inspection_count();

    const std::vector<int> route = traversal_order(t);
    const double p_hover = min_hover_power(uav, env);
    double clock = 0.0;
    for (std::size_t i = 1; i < route.size(); ++i) {
      const int v = route[i];
      const double leg =
          distance(sc.points[route[i - 1]], sc.points[v]);
      row.flight_j += flight_energy(uav, env, leg);
      const double shadow =
          shadow_db.empty() ? 0.0 : shadow_db[static_cast<std::size_t>(v)];
      row.hover_tx_j += tau *
                        (min_tx_power_w(sc.points[v], radio, shadow) + p_hover) /
                        uav.power_efficiency;
      clock += leg / uav.ground_speed_mps + tau;
    }
    row.completion_s = clock;

    report.flight_energy_j += row.flight_j;
    report.hover_tx_energy_j += row.hover_tx_j;
    report.planning_cost_j += row.planning_cost_j;
    report.per_uav.push_back(row);
  }
  report.total_energy_j = report.flight_energy_j + report.hover_tx_energy_j;
  report.inspection_time_s = inspection_time_s(result, sc, fleet, radio);
  return report;
}

std::vector<std::pair<double, double>> empirical_cdf(
    std::span<const double> samples) {
  if (samples.empty())
    throw EmptySampleError("empirical_cdf: no samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> steps;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double v = sorted[i];
    if (!steps.empty() && steps.back().first == v)
      steps.back().second = static_cast<double>(i + 1) / n;
    else
      steps.emplace_back(v, static_cast<double>(i + 1) / n);
  }
  return steps;
}

}  // namespace swarmplan
