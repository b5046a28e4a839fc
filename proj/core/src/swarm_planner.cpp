#include "swarmplan/swarm_planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swarmplan {

namespace {

constexpr double kUnlimitedDeltaE = 100.0;  // J, when no budget is finite
constexpr double kCostMatchTolRel = 1e-6;
constexpr double kBudgetSlackRel = 1e-9;  // re-summation slack in the validator

std::vector<double> resolve_budgets(const std::vector<UavSpec>& fleet,
                                    const PlannerConfig& cfg) {
  std::vector<double> budgets(fleet.size());
  for (std::size_t k = 0; k < fleet.size(); ++k)
    budgets[k] = cfg.budget_overrides.empty() ? fleet[k].energy_budget_j
                                              : cfg.budget_overrides[k];
  return budgets;
}

double resolve_delta_e(const PlannerConfig& cfg,
                       const std::vector<double>& budgets) {
  if (cfg.delta_e_j > 0.0) return cfg.delta_e_j;
  double smallest = std::numeric_limits<double>::infinity();
  for (double b : budgets)
    if (std::isfinite(b) && b > 0.0) smallest = std::min(smallest, b);
  return std::isfinite(smallest) ? 0.01 * smallest : kUnlimitedDeltaE;
}

}  // namespace

void PlannerConfig::validate() const {
  if (!(lambda >= 1.0))
    throw std::invalid_argument("PlannerConfig: lambda must be >= 1");
  for (double b : budget_overrides)
    if (!(b >= 0.0))
      throw std::invalid_argument("PlannerConfig: budgets must be >= 0");
}

PlanResult plan(const Scenario& sc, const std::vector<UavSpec>& fleet,
                const Environment& env, const RadioConfig& radio,
                const PlannerConfig& cfg, std::span<const double> shadow_db) {
  const auto t_start = std::chrono::steady_clock::now();

  sc.validate();
  env.validate();
  radio.validate();
  cfg.validate();
  if (fleet.empty()) throw std::invalid_argument("plan: fleet is empty");
  for (const UavSpec& uav : fleet) uav.validate();
  if (!cfg.budget_overrides.empty() &&
      cfg.budget_overrides.size() != fleet.size())
    throw std::invalid_argument("plan: one budget override per UAV");

  const int k_count = static_cast<int>(fleet.size());
  const int n = static_cast<int>(sc.points.size());

  std::vector<EnergyGraph> graphs;
  graphs.reserve(k_count);
  for (int k = 0; k < k_count; ++k)
    graphs.push_back(build_graph(sc, k, fleet[k], env, radio, shadow_db));

  std::vector<double> budgets = resolve_budgets(fleet, cfg);
  const double delta_e = resolve_delta_e(cfg, budgets);
  const double lambda = cfg.lambda;

  // Unlimited budgets become a per-scenario sentinel: fleet size times the
  // cost of that UAV's tree over every point, so retirement can only
  // trigger once coverage is already complete.
  std::vector<int> full_pool;
  for (int v = 1; v < n; ++v) full_pool.push_back(v);
  for (int k = 0; k < k_count; ++k) {
    if (std::isfinite(budgets[k])) continue;
    const PrimGrowth g = grow_prim(graphs[k], 0, full_pool, cfg.max_vertices);
    budgets[k] = static_cast<double>(k_count) * g.prefix_cost(g.size());
  }

  // Ascending budget order, ties by fleet index.
  std::vector<int> order(k_count);
  for (int k = 0; k < k_count; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return budgets[a] < budgets[b]; });

  PlanResult result;
  result.trajectories.reserve(k_count);
  for (int k = 0; k < k_count; ++k)
    result.trajectories.push_back(Trajectory::rooted(k, 0));
  result.cost_j.assign(k_count, 0.0);
  result.budget_j = budgets;

  std::vector<char> claimed(n, 0);  // permanently assigned points
  std::vector<int> live = order;
  std::int64_t round = 0;  // grid index m; the round budget is m * delta_e

  std::vector<char> in_pool(n, 0);
  std::vector<int> subpool;
  subpool.reserve(n);

  for (;;) {
    // Unclaimed points at round start.
    int pool_size = 0;
    for (int v = 1; v < n; ++v) {
      in_pool[v] = !claimed[v];
      pool_size += in_pool[v];
    }
    if (pool_size == 0) break;          // full coverage
    if (live.empty()) break;            // nobody left to assign

    round = round > 0 ? round : 1;
    const double e_round = static_cast<double>(round) * delta_e;
    const double cap = lambda * e_round;

    bool any_retirement = false;
    double min_next_cost = std::numeric_limits<double>::infinity();

    for (std::size_t li = 0; li < live.size();) {
      const int k = live[li];
      subpool.clear();
      for (int v = 1; v < n; ++v)
        if (in_pool[v]) subpool.push_back(v);

      const PrimGrowth growth =
          grow_prim(graphs[k], 0, subpool, cfg.max_vertices, cap);
      int i_cap = 0;
      for (int i = 1; i <= growth.size(); ++i)
        if (growth.prefix_cost(i) <= cap) i_cap = i;
      const double c = growth.prefix_cost(i_cap);

      bool committed = false;
      if (c <= budgets[k]) {
        result.trajectories[k] = make_prefix_tree(growth, k, 0, i_cap);
        result.cost_j[k] = c;
        committed = true;
      }

      // Retirement: the next round's budget would exceed this UAV's own,
      // or the shared schedule has already outgrown it. A retiring UAV
      // keeps the largest prefix it can actually afford, claims those
      // points for good, and releases the rest back to the pool.
      if (c + delta_e > budgets[k] || e_round > budgets[k]) {
        if (!committed) {
          int i_own = 0;
          for (int i = 1; i <= i_cap; ++i)
            if (growth.prefix_cost(i) <= budgets[k]) i_own = i;
          result.trajectories[k] = make_prefix_tree(growth, k, 0, i_own);
          result.cost_j[k] = growth.prefix_cost(i_own);
        }
        for (const auto& [v, _] : result.trajectories[k].parent) {
          claimed[v] = 1;
          in_pool[v] = 0;
        }
        live.erase(live.begin() + li);
        any_retirement = true;
        continue;  // li now indexes the next live UAV
      }

      // Tentative removal for the rest of this round.
      for (int i = 0; i < i_cap; ++i) in_pool[growth.order[i]] = 0;

      // Next prefix cost, if the budget cap (not the pool) stopped growth.
      if (growth.size() > i_cap)
        min_next_cost = std::min(min_next_cost, growth.prefix_cost(i_cap + 1));
      ++li;
    }

    // Round end: every point either claimed or tentatively covered means
    // the committed trees of the surviving UAVs complete the plan.
    bool all_covered = true;
    for (int v = 1; v < n && all_covered; ++v) all_covered = !in_pool[v];
    if (all_covered) break;
    if (live.empty()) continue;  // loop re-checks and exits infeasible

    if (any_retirement) {
      ++round;
    } else {
      // Quiet round: nothing changes until the cheapest blocked prefix
      // fits under lambda * budget or the schedule outgrows a surviving
      // UAV's own budget, so jump straight to the first such grid point.
      // Budgets are all finite here (sentinels included), so at least the
      // retirement candidates exist and the schedule always advances to a
      // round that does something.
      std::int64_t next = std::numeric_limits<std::int64_t>::max();
      if (std::isfinite(min_next_cost)) {
        std::int64_t grow = static_cast<std::int64_t>(
            std::ceil(min_next_cost / (lambda * delta_e) - 1e-12));
        while (static_cast<double>(grow) * delta_e * lambda < min_next_cost)
          ++grow;
        next = grow;
      }
      for (int k : live) {
        std::int64_t retire = static_cast<std::int64_t>(
            std::floor(budgets[k] / delta_e)) + 1;
        while (static_cast<double>(retire) * delta_e <= budgets[k]) ++retire;
        next = std::min(next, retire);
      }
      round = std::max(round + 1, next);
    }
  }

  result.iterations = round;
  for (int v = 1; v < n; ++v) {
    bool covered = claimed[v];
    for (int k = 0; k < k_count && !covered; ++k)
      covered = result.trajectories[k].contains(v);
    if (!covered) result.uncovered_points.push_back(v);
  }
  result.feasible = result.uncovered_points.empty();
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

FeasibilityReport validate_plan(const Scenario& sc,
                                const std::vector<UavSpec>& fleet,
                                const Environment& env,
                                const RadioConfig& radio,
                                const PlanResult& result,
                                std::span<const double> shadow_db) {
  sc.validate();
  const int n = static_cast<int>(sc.points.size());
  FeasibilityReport report;

  // Coverage and disjointness from the trajectories alone. Vertices that
  // do not exist in the scenario count as structural mismatches.
  bool structure_ok = true;
  std::vector<int> owners(n, 0);
  for (const Trajectory& t : result.trajectories)
    for (const auto& [v, p] : t.parent) {
      if (v <= 0 || v >= n || p < 0 || p >= n) {
        structure_ok = false;
        continue;
      }
      ++owners[v];
    }
  for (int v = 1; v < n; ++v) {
    if (owners[v] == 0) report.missing_points.push_back(v);
    if (owners[v] > 1) report.duplicated_points.push_back(v);
  }
  report.coverage_ok = report.missing_points.empty();
  report.disjoint_ok = report.duplicated_points.empty() && structure_ok;

  // Budgets and stored energies, recomputed from the raw models.
  report.budgets_ok = true;
  report.costs_match = true;
  for (std::size_t k = 0; k < result.trajectories.size(); ++k) {
    const Trajectory& t = result.trajectories[k];
    const UavSpec& uav = fleet.at(k);

    std::map<int, std::vector<int>> children;
    for (const auto& [v, p] : t.parent)
      if (v > 0 && v < n && p >= 0 && p < n) children[p].push_back(v);

    std::map<int, double> recomputed;
    recomputed[t.root] = 0.0;
    std::vector<int> stack{t.root};
    double total = 0.0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : children[u]) {
        const double shadow =
            shadow_db.empty() ? 0.0 : shadow_db[static_cast<std::size_t>(v)];
        recomputed[v] = recomputed[u] + visit_increment_j(uav, env, radio,
                                                          sc.points[u],
                                                          sc.points[v], shadow);
        total += recomputed[v];
        stack.push_back(v);
      }
    }

    for (const auto& [v, stored] : t.cumulative_energy) {
      const auto it = recomputed.find(v);
      if (it == recomputed.end()) {
        // Unreachable or out-of-range vertex: unconditional mismatch.
        report.max_cost_mismatch_rel = std::max(report.max_cost_mismatch_rel,
                                               1.0);
        continue;
      }
      const double fresh = it->second;
      const double rel =
          std::abs(stored - fresh) / std::max(std::abs(fresh), 1e-12);
      report.max_cost_mismatch_rel = std::max(report.max_cost_mismatch_rel, rel);
    }
    const double stored_total = result.cost_j.at(k);
    const double total_rel =
        std::abs(stored_total - total) / std::max(std::abs(total), 1e-12);
    report.max_cost_mismatch_rel =
        std::max(report.max_cost_mismatch_rel, total_rel);

    if (total > result.budget_j.at(k) * (1.0 + kBudgetSlackRel))
      report.over_budget_uavs.push_back(static_cast<int>(k));
  }
  report.costs_match = report.max_cost_mismatch_rel <= kCostMatchTolRel;
  report.budgets_ok = report.over_budget_uavs.empty();
  return report;
}

}  // namespace swarmplan
