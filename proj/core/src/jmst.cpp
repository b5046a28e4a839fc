#include "swarmplan/jmst.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "swarmplan/errors.hpp"

namespace swarmplan {

void JmstConfig::validate() const {
  if (!(lambda >= 1.0))
    throw std::invalid_argument("JmstConfig: lambda must be >= 1");
}

PrimGrowth grow_prim(const EnergyGraph& g, int root, std::span<const int> pool,
                     int max_vertices, double stop_above) {
  const int limit = max_vertices < 0
                        ? static_cast<int>(pool.size())
                        : std::min<int>(max_vertices, pool.size());

  PrimGrowth growth;
  growth.order.reserve(limit);

  // best_w[u] / best_src[u]: cheapest known edge from the tree into u.
  // Candidates are kept id-sorted and updates use strict comparisons, so
  // ties resolve to the lowest destination id, then the lowest source id.
  std::vector<int> remaining(pool.begin(), pool.end());
  std::sort(remaining.begin(), remaining.end());
  std::vector<double> best_w(remaining.size());
  std::vector<int> best_src(remaining.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    best_w[i] = g.weight(root, remaining[i]);
    best_src[i] = root;
  }

  std::vector<double> cum_of(g.vertex_count(), 0.0);  // root-path energies
  double running_cost = 0.0;

  for (int step = 0; step < limit; ++step) {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i)
      if (best_w[i] < best_w[pick]) pick = i;

    const int v = remaining[pick];
    const int src = best_src[pick];
    const double cum_v = cum_of[src] + best_w[pick];
    cum_of[v] = cum_v;
    running_cost += cum_v;

    growth.order.push_back(v);
    growth.parent.push_back(src);
    growth.cum.push_back(cum_v);
    growth.cost.push_back(running_cost);

    remaining.erase(remaining.begin() + pick);
    best_w.erase(best_w.begin() + pick);
    best_src.erase(best_src.begin() + pick);

    for (std::size_t i = 0; i < remaining.size(); ++i) {
      const double cand = g.weight(v, remaining[i]);
      if (cand < best_w[i] || (cand == best_w[i] && v < best_src[i])) {
        best_w[i] = cand;
        best_src[i] = v;
      }
    }

    if (running_cost > stop_above) break;
  }
  return growth;
}

Trajectory make_prefix_tree(const PrimGrowth& growth, int uav_index, int root,
                            int vertex_count) {
  if (vertex_count > growth.size())
    throw InsufficientVerticesError(
        "prefix of " + std::to_string(vertex_count) + " vertices from a " +
        std::to_string(growth.size()) + "-vertex growth");
  Trajectory t = Trajectory::rooted(uav_index, root);
  for (int i = 0; i < vertex_count; ++i) {
    const double edge_w =
        growth.cum[i] - t.cumulative_energy.at(growth.parent[i]);
    t.add_vertex(growth.order[i], growth.parent[i], edge_w);
  }
  return t;
}

Trajectory prim_tree(const EnergyGraph& g, int root, int vertex_count) {
  std::vector<int> pool;
  pool.reserve(g.vertex_count() - 1);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != root) pool.push_back(v);
  if (vertex_count < 0 || vertex_count > static_cast<int>(pool.size()))
    throw InsufficientVerticesError(
        "prim_tree: requested " + std::to_string(vertex_count) +
        " vertices from a pool of " + std::to_string(pool.size()));
  PrimGrowth growth = grow_prim(g, root, pool, vertex_count);
  return make_prefix_tree(growth, g.uav_index(), root, vertex_count);
}

Trajectory budgeted_jmst(const EnergyGraph& g, int root,
                         std::span<const int> pool, double budget_j,
                         const JmstConfig& cfg) {
  cfg.validate();
  if (budget_j < 0.0)
    throw std::invalid_argument("budgeted_jmst: budget must be >= 0");

  const double cap = cfg.lambda * budget_j;
  PrimGrowth growth = grow_prim(g, root, pool, cfg.max_vertices, cap);

  int best = 0;
  for (int i = 1; i <= growth.size(); ++i)
    if (growth.prefix_cost(i) <= cap) best = i;
  return make_prefix_tree(growth, g.uav_index(), root, best);
}

Trajectory budgeted_jmst(const EnergyGraph& g, double budget_j,
                         const JmstConfig& cfg) {
  std::vector<int> pool;
  pool.reserve(g.vertex_count() - 1);
  for (int v = 1; v < g.vertex_count(); ++v) pool.push_back(v);
  return budgeted_jmst(g, 0, pool, budget_j, cfg);
}

}  // namespace swarmplan
