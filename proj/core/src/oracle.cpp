#include "swarmplan/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "swarmplan/errors.hpp"

namespace swarmplan {

namespace {

// Cheapest labeled rooted tree over one vertex group, plus its shape.
struct GroupBest {
  double cost = std::numeric_limits<double>::infinity();
  std::vector<int> parent;  // parent[i] of member i, in group order (ids)
};

// Enumerates every labeled tree on {root} + members via Prufer sequences
// and keeps the cheapest under the directed-from-root cost.
GroupBest best_group_tree(const EnergyGraph& g,
                          const std::vector<int>& members) {
  const int m = static_cast<int>(members.size());
  GroupBest best;
  if (m == 0) {
    best.cost = 0.0;
    return best;
  }

  // Local labels: 0 = root, 1..m = members[i - 1].
  const int n = m + 1;
  std::vector<int> global(n);
  global[0] = 0;
  for (int i = 0; i < m; ++i) global[i + 1] = members[i];

  std::vector<int> prufer(std::max(0, n - 2), 0);
  std::vector<int> degree(n), parent_local(n), stack(n);
  std::vector<std::vector<int>> adjacency(n);
  std::vector<double> cum(n);

  for (;;) {
    // Decode the current sequence into an undirected tree.
    std::fill(degree.begin(), degree.end(), 1);
    for (int s : prufer) ++degree[s];
    for (auto& a : adjacency) a.clear();

    std::vector<int> deg = degree;
    for (int s : prufer) {
      int leaf = -1;
      for (int v = 0; v < n; ++v)
        if (deg[v] == 1) {
          leaf = v;
          break;
        }
      adjacency[leaf].push_back(s);
      adjacency[s].push_back(leaf);
      deg[leaf] = 0;
      --deg[s];
    }
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w)
      if (deg[w] == 1) (u < 0 ? u : v) = w;
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);

    // Root at local 0 and accumulate the cost.
    parent_local[0] = -1;
    cum[0] = 0.0;
    double cost = 0.0;
    int sp = 0;
    stack[sp++] = 0;
    while (sp > 0) {
      const int a = stack[--sp];
      for (int b : adjacency[a]) {
        if (b == parent_local[a]) continue;
        parent_local[b] = a;
        cum[b] = cum[a] + g.weight(global[a], global[b]);
        cost += cum[b];
        stack[sp++] = b;
      }
    }

    if (cost < best.cost) {
      best.cost = cost;
      best.parent.assign(m, 0);
      for (int i = 1; i < n; ++i)
        best.parent[i - 1] = global[parent_local[i]];
    }

    // Next Prufer sequence (odometer over n labels).
    int pos = static_cast<int>(prufer.size()) - 1;
    while (pos >= 0 && prufer[pos] == n - 1) prufer[pos--] = 0;
    if (pos < 0) break;
    ++prufer[pos];
  }
  return best;
}

}  // namespace

OracleResult exact_plan(const Scenario& sc, const std::vector<UavSpec>& fleet,
                        const Environment& env, const RadioConfig& radio,
                        std::span<const double> shadow_db) {
  sc.validate();
  const int n_points = sc.inspection_point_count();
  const int k_count = static_cast<int>(fleet.size());
  if (n_points > kOracleMaxPoints || k_count > kOracleMaxUavs)
    throw InstanceTooLargeError(
        "exact_plan: caps are " + std::to_string(kOracleMaxPoints) +
        " points and " + std::to_string(kOracleMaxUavs) + " UAVs");
  if (k_count == 0) throw std::invalid_argument("exact_plan: fleet is empty");

  std::vector<EnergyGraph> graphs;
  for (int k = 0; k < k_count; ++k)
    graphs.push_back(build_graph(sc, k, fleet[k], env, radio, shadow_db));

  // Lazy per-UAV memo of the cheapest tree for each member subset.
  std::vector<std::unordered_map<std::uint32_t, GroupBest>> memo(k_count);
  const auto group_of = [&](int k, std::uint32_t mask) -> const GroupBest& {
    auto it = memo[k].find(mask);
    if (it != memo[k].end()) return it->second;
    std::vector<int> members;
    for (int i = 0; i < n_points; ++i)
      if (mask & (1u << i)) members.push_back(i + 1);
    return memo[k].emplace(mask, best_group_tree(graphs[k], members))
        .first->second;
  };

  OracleResult result;
  std::vector<std::uint32_t> best_masks;

  // Every ordered partition: assignment[i] names the UAV taking point i+1.
  std::vector<int> assignment(n_points, 0);
  for (;;) {
    std::vector<std::uint32_t> masks(k_count, 0);
    for (int i = 0; i < n_points; ++i)
      masks[assignment[i]] |= (1u << i);

    double total = 0.0;
    bool ok = true;
    for (int k = 0; k < k_count && ok; ++k) {
      const GroupBest& gb = group_of(k, masks[k]);
      if (gb.cost > fleet[k].energy_budget_j) ok = false;
      total += gb.cost;
    }
    if (ok && total < result.optimal_cost_j) {
      result.optimal_cost_j = total;
      result.feasible = true;
      best_masks = masks;
    }

    int pos = n_points - 1;
    while (pos >= 0 && assignment[pos] == k_count - 1) assignment[pos--] = 0;
    if (pos < 0) break;
    ++assignment[pos];
  }

  if (result.feasible) {
    for (int k = 0; k < k_count; ++k) {
      const GroupBest& gb = group_of(k, best_masks[k]);
      Trajectory t = Trajectory::rooted(k, 0);
      std::vector<int> members;
      for (int i = 0; i < n_points; ++i)
        if (best_masks[k] & (1u << i)) members.push_back(i + 1);
      // Attach in root-path order; loop until every member is placed.
      std::vector<char> placed(members.size(), 0);
      std::size_t remaining = members.size();
      while (remaining > 0) {
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (placed[i] || !t.contains(gb.parent[i])) continue;
          t.add_vertex(members[i], gb.parent[i],
                       graphs[k].weight(gb.parent[i], members[i]));
          placed[i] = 1;
          --remaining;
        }
      }
      result.assignment.push_back(std::move(t));
    }
  }
  return result;
}

PlanResult oracle_as_plan(const OracleResult& oracle,
                          const std::vector<UavSpec>& fleet) {
  PlanResult plan;
  plan.feasible = oracle.feasible;
  plan.trajectories = oracle.assignment;
  for (std::size_t k = 0; k < fleet.size(); ++k) {
    plan.budget_j.push_back(fleet[k].energy_budget_j);
    plan.cost_j.push_back(k < oracle.assignment.size()
                              ? tree_cost_j(oracle.assignment[k])
                              : 0.0);
  }
  return plan;
}

}  // namespace swarmplan
