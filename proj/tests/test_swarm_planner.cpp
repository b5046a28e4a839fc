#include <cmath>

#include <doctest.h>

#include "support/instance_helpers.hpp"
#include "swarmplan/experiment.hpp"
#include "swarmplan/oracle.hpp"
#include "swarmplan/swarm_planner.hpp"

using namespace swarmplan;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

Scenario collinear3() {
  Scenario sc;
  sc.area_width_m = 200.0;
  sc.area_height_m = 200.0;
  sc.points = {{0, 0, 0}, {10, 0, 1}, {20, 0, 2}};
  return sc;
}

double total_cost(const PlanResult& r) {
  double c = 0.0;
  for (double v : r.cost_j) c += v;
  return c;
}

}  // namespace

TEST_SUITE("swarm_planner") {

TEST_CASE("single point, single UAV") {
  Scenario sc;
  sc.area_width_m = sc.area_height_m = 200.0;
  sc.points = {{0, 0, 0}, {60, 80, 1}};
  const std::vector<UavSpec> fleet(1);
  const Environment env;
  const RadioConfig radio;
  PlannerConfig cfg;
  cfg.delta_e_j = 100.0;

  const PlanResult r = plan(sc, fleet, env, radio, cfg);
  REQUIRE(r.feasible);
  REQUIRE(r.trajectories[0].contains(1));
  CHECK(r.trajectories[0].parent.at(1) == 0);

  const double inc =
      visit_increment_j(fleet[0], env, radio, sc.points[0], sc.points[1]);
  CHECK(rel_err(r.cost_j[0], inc) < 1e-12);

  // The loop stops at the first grid budget whose slack cap admits the
  // point's tree.
  const std::int64_t expected =
      static_cast<std::int64_t>(std::ceil(inc / (cfg.lambda * cfg.delta_e_j)));
  CHECK(r.iterations == expected);

  CHECK(validate_plan(sc, fleet, env, radio, r).ok());
}

TEST_CASE("two tight-budget UAVs split a collinear pair") {
  const Scenario sc = collinear3();
  const Environment env;
  const RadioConfig radio;
  const EnergyGraph g = build_graph(sc, 0, UavSpec{}, env, radio);

  // Each budget affords either point alone, never both (chain or star
  // costs exceed it).
  const double budget = g.weight(0, 2) * 1.01;
  REQUIRE(budget < g.weight(0, 1) + g.weight(0, 2));        // star
  REQUIRE(budget < 2.0 * g.weight(0, 1) + g.weight(1, 2));  // chain

  std::vector<UavSpec> fleet(2);
  for (UavSpec& u : fleet) u.energy_budget_j = budget;

  const PlanResult r = plan(sc, fleet, env, radio);
  REQUIRE(r.feasible);
  CHECK(r.trajectories[0].inspection_count() == 1);
  CHECK(r.trajectories[1].inspection_count() == 1);
  CHECK(validate_plan(sc, fleet, env, radio, r).ok());

  // The exact solver agrees the split is feasible and never costs more.
  const OracleResult oracle = exact_plan(sc, fleet, env, radio);
  REQUIRE(oracle.feasible);
  CHECK(oracle.optimal_cost_j <= total_cost(r) + 1e-9);
}

TEST_CASE("zero budgets are infeasible with everything uncovered") {
  const Scenario sc = collinear3();
  const std::vector<UavSpec> fleet(2);
  PlannerConfig cfg;
  cfg.budget_overrides = {0.0, 0.0};
  const PlanResult r = plan(sc, fleet, Environment{}, RadioConfig{}, cfg);
  CHECK_FALSE(r.feasible);
  CHECK(r.uncovered_points == std::vector<int>{1, 2});
  for (const Trajectory& t : r.trajectories) CHECK(t.inspection_count() == 0);
}

TEST_CASE("validator flags constructed defects") {
  const Scenario sc = collinear3();
  const std::vector<UavSpec> fleet(2);
  const Environment env;
  const RadioConfig radio;
  const PlanResult good = plan(sc, fleet, env, radio);
  REQUIRE(good.feasible);
  REQUIRE(validate_plan(sc, fleet, env, radio, good).ok());

  SUBCASE("duplicated vertex across trajectories") {
    PlanResult bad = good;
    // Move a copy of an owned vertex into the other trajectory.
    const int owner = bad.trajectories[0].contains(1) ? 0 : 1;
    const int thief = 1 - owner;
    bad.trajectories[thief].parent[1] = 0;
    bad.trajectories[thief].cumulative_energy[1] =
        bad.trajectories[owner].cumulative_energy.at(1);
    const FeasibilityReport rep = validate_plan(sc, fleet, env, radio, bad);
    CHECK_FALSE(rep.disjoint_ok);
    CHECK(rep.duplicated_points == std::vector<int>{1});
  }

  SUBCASE("corrupted stored cost") {
    PlanResult bad = good;
    bad.cost_j[0] += 1.0;
    const FeasibilityReport rep = validate_plan(sc, fleet, env, radio, bad);
    CHECK_FALSE(rep.costs_match);
    CHECK(rep.max_cost_mismatch_rel > 1e-6);
  }

  SUBCASE("corrupted cumulative energy") {
    PlanResult bad = good;
    for (auto& [v, cum] : bad.trajectories[0].cumulative_energy)
      if (v != 0) cum *= 1.001;
    CHECK_FALSE(validate_plan(sc, fleet, env, radio, bad).costs_match);
  }

  SUBCASE("vertex ids outside the scenario") {
    PlanResult bad = good;
    bad.trajectories[0].parent[99] = 0;
    bad.trajectories[0].cumulative_energy[99] = 1.0;
    const FeasibilityReport rep = validate_plan(sc, fleet, env, radio, bad);
    CHECK_FALSE(rep.disjoint_ok);
    CHECK_FALSE(rep.costs_match);
  }
}

TEST_CASE("single unlimited UAV covers everything with the full prim tree") {
  SplitMix64 rng(314);
  const Environment env;
  const RadioConfig radio;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(18));
    const Scenario sc = testutil::random_scenario(rng, n);
    const std::vector<UavSpec> fleet(1);
    const PlanResult r = plan(sc, fleet, env, radio);
    REQUIRE(r.feasible);
    CHECK(r.trajectories[0].inspection_count() == n);

    const EnergyGraph g = build_graph(sc, 0, fleet[0], env, radio);
    CHECK(rel_err(r.cost_j[0], tree_cost_j(prim_tree(g, 0, n))) < 1e-12);
  }
}

TEST_CASE("randomized instances: feasibility, determinism, round bound") {
  SplitMix64 rng(271828);
  const Environment env;
  const RadioConfig radio;
  int feasible_count = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(11));
    const int k = 1 + static_cast<int>(rng.next_below(4));
    const Scenario sc = testutil::random_scenario(rng, n);
    std::vector<UavSpec> fleet;
    for (int i = 0; i < k; ++i) {
      UavSpec u = testutil::random_uav(rng);
      // Mix unlimited and tight budgets.
      if (rng.next_below(2) == 0)
        u.energy_budget_j = rng.next_in(1e4, 8e5);
      fleet.push_back(u);
    }
    const PlanResult r = plan(sc, fleet, env, radio);
    const FeasibilityReport rep = validate_plan(sc, fleet, env, radio, r);
    CHECK(rep.costs_match);
    CHECK(rep.disjoint_ok);
    CHECK(r.feasible == rep.ok());
    if (r.feasible) {
      ++feasible_count;
      CHECK(rep.coverage_ok);
      CHECK(rep.budgets_ok);
    } else {
      CHECK_FALSE(r.uncovered_points.empty());
    }

    const PlanResult again = plan(sc, fleet, env, radio);
    CHECK(again.feasible == r.feasible);
    CHECK(again.cost_j == r.cost_j);
    CHECK(again.iterations == r.iterations);
    for (std::size_t i = 0; i < fleet.size(); ++i)
      CHECK(again.trajectories[i].parent == r.trajectories[i].parent);

    // Round bound: the budget schedule plus one coverage round per point.
    double max_budget = 0.0;
    for (double b : r.budget_j) max_budget = std::max(max_budget, b);
    const double delta_e = [&] {
      double smallest = std::numeric_limits<double>::infinity();
      for (const UavSpec& u : fleet)
        if (u.has_finite_budget())
          smallest = std::min(smallest, u.energy_budget_j);
      return std::isfinite(smallest) ? 0.01 * smallest : 100.0;
    }();
    CHECK(r.iterations <=
          static_cast<std::int64_t>(std::ceil(max_budget / delta_e)) + n + 2);
  }
  CHECK(feasible_count > 5);  // the mix must exercise both outcomes
  MESSAGE("feasible instances: ", feasible_count, "/60");
}

TEST_CASE("budget-starved UAV retires at the schedule bound") {
  // The single point costs far more than the budget: the UAV can never
  // commit, and must retire once the shared schedule passes its budget
  // instead of chasing the unaffordable tree.
  Scenario sc;
  sc.area_width_m = sc.area_height_m = 500.0;
  sc.points = {{0, 0, 0}, {400, 300, 1}};  // ~118 kJ to inspect
  std::vector<UavSpec> fleet(1);
  fleet[0].energy_budget_j = 5000.0;
  PlannerConfig cfg;
  cfg.delta_e_j = 50.0;

  const PlanResult r = plan(sc, fleet, Environment{}, RadioConfig{}, cfg);
  CHECK_FALSE(r.feasible);
  CHECK(r.uncovered_points == std::vector<int>{1});
  CHECK(r.iterations <=
        static_cast<std::int64_t>(std::ceil(5000.0 / 50.0)) + 2);
}

TEST_CASE("per-tree vertex caps degrade to a reported infeasibility") {
  SplitMix64 rng(505);
  const Scenario sc = testutil::random_scenario(rng, 5);
  const std::vector<UavSpec> fleet(1);
  PlannerConfig cfg;
  cfg.max_vertices = 2;  // one UAV can never cover five points

  const PlanResult r = plan(sc, fleet, Environment{}, RadioConfig{}, cfg);
  CHECK_FALSE(r.feasible);
  CHECK(r.trajectories[0].inspection_count() == 2);
  CHECK(r.uncovered_points.size() == 3);
  const FeasibilityReport rep =
      validate_plan(sc, fleet, Environment{}, RadioConfig{}, r);
  CHECK(rep.disjoint_ok);
  CHECK(rep.budgets_ok);
  CHECK_FALSE(rep.coverage_ok);
}

TEST_CASE("mean objective is nonincreasing in fleet size") {
  const Environment env;
  const RadioConfig radio;
  const int n = 30, seeds = 50;
  double prev_mean = std::numeric_limits<double>::infinity();
  for (int k : {1, 2, 4, 8}) {
    double sum = 0.0;
    for (int s = 0; s < seeds; ++s) {
      const Scenario sc = generate_scenario(n, 200.0, 200.0, 1000 + s);
      const std::vector<UavSpec> fleet(k);
      sum += total_cost(plan(sc, fleet, env, radio));
    }
    const double mean = sum / seeds;
    CHECK(mean <= prev_mean);
    prev_mean = mean;
  }
}

}  // TEST_SUITE
