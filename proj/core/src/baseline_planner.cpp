#include "swarmplan/baseline_planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "swarmplan/rng.hpp"

namespace swarmplan {

namespace {

struct Completion {
  double time_s;
  int uav;
  bool operator>(const Completion& other) const {
    if (time_s != other.time_s) return time_s > other.time_s;
    return uav > other.uav;
  }
};

}  // namespace

PlanResult plan_nearest_neighbor(const Scenario& sc,
                                 const std::vector<UavSpec>& fleet,
                                 const Environment& env,
                                 const RadioConfig& radio, std::uint64_t seed,
                                 std::span<const double> shadow_db) {
  const auto t_start = std::chrono::steady_clock::now();
  sc.validate();
  env.validate();
  radio.validate();
  if (fleet.empty())
    throw std::invalid_argument("plan_nearest_neighbor: fleet is empty");
  for (const UavSpec& uav : fleet) uav.validate();

  const int n = static_cast<int>(sc.points.size());
  const int k_count = static_cast<int>(fleet.size());
  const double tau = radio.air_time_s();

  std::vector<char> unclaimed(n, 1);
  unclaimed[0] = 0;
  int unclaimed_count = n - 1;

  std::vector<int> position(k_count, 0);  // current point id per UAV
  std::vector<std::vector<int>> route(k_count);

  const auto claim_nearest = [&](int k) -> int {
    const Point& from = sc.points[position[k]];
    int best = -1;
    double best_d = 0.0;
    for (int v = 1; v < n; ++v) {
      if (!unclaimed[v]) continue;
      const double d = distance(from, sc.points[v]);
      if (best < 0 || d < best_d) {  // id ascent breaks distance ties
        best = v;
        best_d = d;
      }
    }
    return best;
  };

  std::priority_queue<Completion, std::vector<Completion>,
                      std::greater<Completion>>
      events;

  // First targets are uniformly random among what is still unclaimed,
  // assigned one UAV at a time in fleet order.
  SplitMix64 rng(mix_seed(seed, 0x6261736531ULL));
  for (int k = 0; k < k_count && unclaimed_count > 0; ++k) {
    std::vector<int> pool;
    for (int v = 1; v < n; ++v)
      if (unclaimed[v]) pool.push_back(v);
    const int target = pool[rng.next_below(pool.size())];
    unclaimed[target] = 0;
    --unclaimed_count;
    route[k].push_back(target);
    const double d = distance(sc.points[0], sc.points[target]);
    events.push({d / fleet[k].ground_speed_mps + tau, k});
    position[k] = target;
  }

  while (!events.empty()) {
    const Completion done = events.top();
    events.pop();
    if (unclaimed_count == 0) continue;
    const int k = done.uav;
    const int target = claim_nearest(k);
    unclaimed[target] = 0;
    --unclaimed_count;
    const double d = distance(sc.points[position[k]], sc.points[target]);
    route[k].push_back(target);
    position[k] = target;
    events.push({done.time_s + d / fleet[k].ground_speed_mps + tau, k});
  }

  PlanResult result;
  result.iterations = 0;
  result.cost_j.assign(k_count, 0.0);
  result.budget_j.reserve(k_count);
  for (const UavSpec& uav : fleet) result.budget_j.push_back(uav.energy_budget_j);

  bool budgets_ok = true;
  for (int k = 0; k < k_count; ++k) {
    Trajectory t = Trajectory::rooted(k, 0);
    int prev = 0;
    for (int v : route[k]) {
      const double shadow =
          shadow_db.empty() ? 0.0 : shadow_db[static_cast<std::size_t>(v)];
      t.add_vertex(v, prev,
                   visit_increment_j(fleet[k], env, radio, sc.points[prev],
                                     sc.points[v], shadow));
      prev = v;
    }
    result.cost_j[k] = tree_cost_j(t);
    if (result.cost_j[k] > result.budget_j[k]) budgets_ok = false;
    result.trajectories.push_back(std::move(t));
  }
  result.feasible = budgets_ok;  // coverage and disjointness hold by design
  result.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

}  // namespace swarmplan
