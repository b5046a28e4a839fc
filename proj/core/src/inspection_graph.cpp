#include "swarmplan/inspection_graph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace swarmplan {

void Scenario::validate() const {
  if (points.empty())
    throw std::invalid_argument("Scenario: needs at least the base station");
  if (!(area_width_m > 0.0) || !(area_height_m > 0.0))
    throw std::invalid_argument("Scenario: area must be positive");
  std::unordered_set<int> ids;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& p = points[i];
    if (p.id != static_cast<int>(i))
      throw std::invalid_argument("Scenario: point ids must equal positions");
    if (!ids.insert(p.id).second)
      throw std::invalid_argument("Scenario: duplicate point id " +
                                  std::to_string(p.id));
    if (!std::isfinite(p.x1) || !std::isfinite(p.x2))
      throw std::invalid_argument("Scenario: non-finite coordinate");
    if (p.x1 < 0.0 || p.x1 > area_width_m || p.x2 < 0.0 ||
        p.x2 > area_height_m)
      throw std::invalid_argument("Scenario: point " + std::to_string(p.id) +
                                  " outside area bounds");
  }
}

Trajectory Trajectory::rooted(int uav_index, int root) {
  Trajectory t;
  t.uav_index = uav_index;
  t.root = root;
  t.cumulative_energy[root] = 0.0;
  return t;
}

void Trajectory::add_vertex(int v, int parent_vertex, double edge_weight_j) {
  if (contains(v))
    throw std::invalid_argument("Trajectory: vertex already present");
  auto it = cumulative_energy.find(parent_vertex);
  if (it == cumulative_energy.end())
    throw std::invalid_argument("Trajectory: parent not in tree");
  parent[v] = parent_vertex;
  cumulative_energy[v] = it->second + edge_weight_j;
}

std::vector<int> Trajectory::vertices() const {
  std::vector<int> out;
  out.reserve(cumulative_energy.size());
  for (const auto& [v, _] : cumulative_energy) out.push_back(v);
  return out;
}

double visit_increment_j(const UavSpec& uav, const Environment& env,
                         const RadioConfig& cfg, const Point& from,
                         const Point& to, double shadow_db_to) {
  const double stay_s = cfg.air_time_s();
  const double stay_power =
      min_tx_power_w(to, cfg, shadow_db_to) + min_hover_power(uav, env);
  return stay_s * stay_power / uav.power_efficiency +
         flight_energy(uav, env, distance(from, to));
}

EnergyGraph build_graph(const Scenario& sc, int uav_index, const UavSpec& uav,
                        const Environment& env, const RadioConfig& cfg,
                        std::span<const double> shadow_db) {
  sc.validate();
  uav.validate();
  env.validate();
  cfg.validate();
  if (!shadow_db.empty() && shadow_db.size() != sc.points.size())
    throw std::invalid_argument("build_graph: one shadow sample per point");
  if (distance(sc.points[0], cfg.bs_location) > 1e-9)
    throw std::invalid_argument(
        "build_graph: scenario point 0 must sit at the radio BS location");

  const int n = static_cast<int>(sc.points.size());
  EnergyGraph g(uav_index, n);

  // Per-destination dwell energy and the per-metre flight energy factor;
  // the weight of (a, b) is stay[b] + flight_per_m * dist(a, b).
  const double tau = cfg.air_time_s();
  const double eta = uav.power_efficiency;
  const double p_hover = min_hover_power(uav, env);
  const double flight_per_m =
      min_flight_power(uav, env) / (uav.ground_speed_mps * eta);

  std::vector<double> stay(n);
  for (int b = 0; b < n; ++b) {
    const double shadow = shadow_db.empty() ? 0.0 : shadow_db[b];
    stay[b] =
        tau * (min_tx_power_w(sc.points[b], cfg, shadow) + p_hover) / eta;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      g.set_weight(a, b,
                   stay[b] + flight_per_m * distance(sc.points[a],
                                                     sc.points[b]));
    }
  }
  return g;
}

double tree_cost_j(const Trajectory& t) {
  double total = 0.0;
  for (const auto& [_, cum] : t.cumulative_energy) total += cum;
  return total;
}

}  // namespace swarmplan
