#pragma once

// Randomized instances and brute-force graph oracles shared by the test
// suites. The enumerators here are exhaustive and deliberately naive.

#include <algorithm>
#include <limits>
#include <vector>

#include "swarmplan/inspection_graph.hpp"
#include "swarmplan/rng.hpp"

namespace testutil {

using swarmplan::EnergyGraph;
using swarmplan::Environment;
using swarmplan::Point;
using swarmplan::Scenario;
using swarmplan::SplitMix64;
using swarmplan::Trajectory;
using swarmplan::UavSpec;

inline Scenario random_scenario(SplitMix64& rng, int n_points,
                                double width = 200.0, double height = 200.0) {
  Scenario sc;
  sc.area_width_m = width;
  sc.area_height_m = height;
  sc.seed = rng.next();
  sc.points.push_back(Point{0.0, 0.0, 0});
  for (int i = 1; i <= n_points; ++i)
    sc.points.push_back(
        Point{rng.next_unit() * width, rng.next_unit() * height, i});
  return sc;
}

inline UavSpec random_uav(SplitMix64& rng) {
  UavSpec uav;
  uav.body_mass_kg = rng.next_in(0.5, 2.5);
  uav.battery_mass_kg = rng.next_in(0.3, 1.5);
  uav.rotor_count = 2 + static_cast<int>(rng.next_below(7));
  uav.rotor_diameter_m = rng.next_in(0.1, 0.6);
  uav.power_efficiency = rng.next_in(0.3, 1.0);
  uav.ground_speed_mps = rng.next_in(0.5, 5.0);
  uav.drag_force_n = rng.next_in(0.0, 15.0);
  return uav;
}

inline Environment random_env(SplitMix64& rng) {
  return Environment(rng.next_in(0.9, 1.4), 9.81, rng.next_in(0.0, 1.2));
}

/// Independent tree cost: per vertex, walk the parent chain to the root
/// summing graph weights, then add up. Ignores the stored cumulative map.
inline double ref_tree_cost(const Trajectory& t, const EnergyGraph& g) {
  double total = 0.0;
  for (const auto& [v, _] : t.parent) {
    int u = v;
    while (u != t.root) {
      const int p = t.parent.at(u);
      total += g.weight(p, u);
      u = p;
    }
  }
  return total;
}

/// Root-path energy of one vertex, same independent walk.
inline double ref_root_path(const Trajectory& t, const EnergyGraph& g, int v) {
  double sum = 0.0;
  while (v != t.root) {
    const int p = t.parent.at(v);
    sum += g.weight(p, v);
    v = p;
  }
  return sum;
}

/// All rooted spanning arborescences by parent-array enumeration. Calls
/// `visit(parent)` with parent[v] defined for v = 1..n-1 (root 0).
template <typename Visit>
inline void enumerate_arborescences(int vertex_count, Visit visit) {
  const int n = vertex_count;
  std::vector<int> parent(n, 0);
  const auto is_tree = [&]() {
    for (int v = 1; v < n; ++v) {
      int u = v;
      int hops = 0;
      while (u != 0 && hops <= n) {
        u = parent[u];
        ++hops;
      }
      if (u != 0) return false;
    }
    return true;
  };
  for (;;) {
    if (is_tree()) visit(parent);
    int pos = n - 1;
    while (pos >= 1) {
      ++parent[pos];
      if (parent[pos] == pos) ++parent[pos];  // no self-loops
      if (parent[pos] < n) break;
      parent[pos] = 0;
      --pos;
    }
    if (pos < 1) break;
  }
}

/// Minimum directed edge-weight sum over all spanning arborescences.
inline double min_arborescence_edge_sum(const EnergyGraph& g) {
  double best = std::numeric_limits<double>::infinity();
  enumerate_arborescences(g.vertex_count(), [&](const std::vector<int>& parent) {
    double sum = 0.0;
    for (int v = 1; v < g.vertex_count(); ++v) sum += g.weight(parent[v], v);
    best = std::min(best, sum);
  });
  return best;
}

/// Exhaustive best cumulative tree cost per vertex-subset size: result[i]
/// is the cheapest cost of any rooted tree covering exactly i points.
inline std::vector<double> best_cost_by_size(const EnergyGraph& g) {
  const int n = g.vertex_count();
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  best[0] = 0.0;
  // Subset enumeration over non-root vertices, then all parent arrays.
  for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n - 1; ++i)
      if (mask & (1u << i)) members.push_back(i + 1);
    const int m = static_cast<int>(members.size());
    // parent of members[i] indexes {0} + members.
    std::vector<int> choice(m, 0);
    for (;;) {
      // Detect cycles by walking each member to the root.
      bool tree = true;
      double cost = 0.0;
      for (int i = 0; i < m && tree; ++i) {
        int u = i;
        int hops = 0;
        double path = 0.0;
        while (u >= 0 && hops <= m) {
          const int parent_ix = choice[u] - 1;  // -1 means root
          const int pv = parent_ix < 0 ? 0 : members[parent_ix];
          path += g.weight(pv, members[u]);
          u = parent_ix;
          ++hops;
        }
        if (hops > m) tree = false;
        cost += path;
      }
      if (tree) best[m] = std::min(best[m], cost);
      int pos = m - 1;
      while (pos >= 0) {
        ++choice[pos];
        if (choice[pos] == pos + 1) ++choice[pos];  // member can't parent itself
        if (choice[pos] <= m) break;
        choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return best;
}

}  // namespace testutil
