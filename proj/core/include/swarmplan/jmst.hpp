#pragma once

#include <limits>
#include <span>
#include <vector>

#include "swarmplan/inspection_graph.hpp"

namespace swarmplan {

struct JmstConfig {
  /// Budget slack factor: a candidate tree qualifies while its cost stays
  /// within lambda * budget.
  double lambda = 2.0;
  /// Cap on non-root vertices (j). Negative means every available vertex.
  int max_vertices = -1;

  void validate() const;
};

/// Record of one Prim run from the root: the attachment order, each
/// attachment's parent and root-path energy, and the tree cost after every
/// prefix. Prefixes are nested, so Y(i) is always the first i attachments.
struct PrimGrowth {
  std::vector<int> order;    // attached vertices, in attachment order
  std::vector<int> parent;   // parent[i] = tree vertex order[i] attached to
  std::vector<double> cum;   // cum[i] = root-path energy of order[i]
  std::vector<double> cost;  // cost[i] = tree cost of Y(i + 1)

  int size() const { return static_cast<int>(order.size()); }

  /// Tree cost of Y(i), the prefix with i non-root vertices.
  double prefix_cost(int i) const { return i == 0 ? 0.0 : cost[i - 1]; }
};

/// Grows a Prim tree from `root` over `pool` (vertex ids, root excluded).
/// Each step attaches the globally cheapest directed edge from the tree to
/// a pool vertex; ties break on lowest destination id, then lowest source
/// id. Stops at `max_vertices` attachments, when the pool is exhausted, or
/// one attachment after the prefix cost first exceeds `stop_above`.
PrimGrowth grow_prim(const EnergyGraph& g, int root, std::span<const int> pool,
                     int max_vertices = -1,
                     double stop_above = std::numeric_limits<double>::infinity());

/// Materializes the prefix Y(i) of a growth as a trajectory.
Trajectory make_prefix_tree(const PrimGrowth& growth, int uav_index, int root,
                            int vertex_count);

/// Prim tree with exactly `vertex_count` non-root vertices over the whole
/// graph. Throws InsufficientVerticesError when the graph is too small.
Trajectory prim_tree(const EnergyGraph& g, int root, int vertex_count);

/// Budget-constrained tree: runs Prim prefixes Y(1)..Y(j) and keeps the
/// last one whose cost stays within lambda * budget; the root-only tree is
/// the degenerate output when nothing qualifies.
Trajectory budgeted_jmst(const EnergyGraph& g, int root,
                         std::span<const int> pool, double budget_j,
                         const JmstConfig& cfg);

/// Same, over every non-root vertex of the graph.
Trajectory budgeted_jmst(const EnergyGraph& g, double budget_j,
                         const JmstConfig& cfg);

}  // namespace swarmplan
