#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "swarmplan/energy_model.hpp"
#include "swarmplan/radio_model.hpp"

namespace swarmplan {

/// An inspection instance. points[0] is the base station and the root of
/// every trajectory; all other points must be visited by some UAV.
struct Scenario {
  std::vector<Point> points;
  double area_width_m = 0.0;
  double area_height_m = 0.0;
  std::uint64_t seed = 0;

  int inspection_point_count() const {
    return static_cast<int>(points.size()) - 1;
  }

  /// Throws std::invalid_argument on duplicate ids, ids not matching the
  /// index, or points outside the area.
  void validate() const;
};

/// Complete directed energy graph for one UAV. weight(a, b) is the energy
/// to leave a, fly to b, and inspect b (transmit while hovering). Weights
/// are evaluated directed away from the root, so the asymmetry introduced
/// by the destination's transmit power is handled explicitly.
class EnergyGraph {
 public:
  EnergyGraph(int uav_index, int vertex_count)
      : uav_(uav_index),
        n_(vertex_count),
        w_(static_cast<std::size_t>(vertex_count) * vertex_count, 0.0) {}

  double weight(int from, int to) const {
    return w_[static_cast<std::size_t>(from) * n_ + to];
  }
  void set_weight(int from, int to, double joules) {
    w_[static_cast<std::size_t>(from) * n_ + to] = joules;
  }

  int vertex_count() const { return n_; }
  int uav_index() const { return uav_; }

 private:
  int uav_;
  int n_;
  std::vector<double> w_;
};

/// Rooted tree of inspection points assigned to one UAV. Stores, per
/// vertex, the cumulative energy from the root along the unique tree path.
struct Trajectory {
  int uav_index = -1;
  int root = 0;
  std::map<int, int> parent;                 // non-root vertex -> parent
  std::map<int, double> cumulative_energy;   // every vertex; root -> 0

  static Trajectory rooted(int uav_index, int root = 0);

  bool contains(int v) const { return cumulative_energy.count(v) != 0; }
  /// Vertex count including the root.
  int vertex_count() const {
    return static_cast<int>(cumulative_energy.size());
  }
  int inspection_count() const { return vertex_count() - 1; }

  /// Attach `v` under `parent_vertex` with the given edge energy.
  void add_vertex(int v, int parent_vertex, double edge_weight_j);

  /// Sorted vertex ids, root included.
  std::vector<int> vertices() const;
};

/// Energy increment for inspecting `to` right after `from`: packet
/// transmission and hover dwell at `to`, plus the flight leg between them.
double visit_increment_j(const UavSpec& uav, const Environment& env,
                         const RadioConfig& cfg, const Point& from,
                         const Point& to, double shadow_db_to = 0.0);

/// Complete graph over all scenario points for one UAV. `shadow_db`, when
/// non-empty, carries one shadowing sample per point id so every planner
/// sees identical weights.
EnergyGraph build_graph(const Scenario& sc, int uav_index, const UavSpec& uav,
                        const Environment& env, const RadioConfig& cfg,
                        std::span<const double> shadow_db = {});

/// Tree cost: the sum of cumulative root-path energies over all vertices
/// (the root contributes zero). Identical for any enumeration order of the
/// same tree.
double tree_cost_j(const Trajectory& t);

}  // namespace swarmplan
