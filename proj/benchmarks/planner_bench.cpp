#include <benchmark/benchmark.h>

#include "swarmplan/baseline_planner.hpp"
#include "swarmplan/experiment.hpp"
#include "swarmplan/oracle.hpp"

using namespace swarmplan;

namespace {

Scenario scenario_of(int n) { return generate_scenario(n, 200, 200, 7); }

void BM_InducedVelocity(benchmark::State& state) {
  const UavSpec uav;
  const Environment env;
  const double t = thrust(uav, env);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        induced_velocity(uav, env, t, uav.ground_speed_mps));
}
BENCHMARK(BM_InducedVelocity);

void BM_BuildGraph(benchmark::State& state) {
  const Scenario sc = scenario_of(static_cast<int>(state.range(0)));
  const UavSpec uav;
  const Environment env;
  const RadioConfig radio;
  for (auto _ : state)
    benchmark::DoNotOptimize(build_graph(sc, 0, uav, env, radio));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildGraph)->Arg(50)->Arg(100)->Arg(200)->Complexity();

void BM_BudgetedJmst(benchmark::State& state) {
  const Scenario sc = scenario_of(static_cast<int>(state.range(0)));
  const EnergyGraph g =
      build_graph(sc, 0, UavSpec{}, Environment{}, RadioConfig{});
  const JmstConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(budgeted_jmst(g, 5e5, cfg));
}
BENCHMARK(BM_BudgetedJmst)->Arg(50)->Arg(200);

void BM_Plan(benchmark::State& state) {
  const Scenario sc = scenario_of(static_cast<int>(state.range(0)));
  const std::vector<UavSpec> fleet(static_cast<std::size_t>(state.range(1)));
  const Environment env;
  const RadioConfig radio;
  const PlannerConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(plan(sc, fleet, env, radio, cfg));
}
BENCHMARK(BM_Plan)
    ->Args({100, 4})
    ->Args({100, 12})
    ->Args({200, 20})
    ->Unit(benchmark::kMillisecond);

void BM_Baseline(benchmark::State& state) {
  const Scenario sc = scenario_of(static_cast<int>(state.range(0)));
  const std::vector<UavSpec> fleet(12);
  const Environment env;
  const RadioConfig radio;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        plan_nearest_neighbor(sc, fleet, env, radio, 42));
}
BENCHMARK(BM_Baseline)->Arg(100)->Arg(200);

void BM_Oracle(benchmark::State& state) {
  const Scenario sc = scenario_of(static_cast<int>(state.range(0)));
  const std::vector<UavSpec> fleet(2);
  const Environment env;
  const RadioConfig radio;
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_plan(sc, fleet, env, radio));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Oracle)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
