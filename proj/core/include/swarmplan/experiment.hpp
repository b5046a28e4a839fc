#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swarmplan/baseline_planner.hpp"
#include "swarmplan/sim_metrics.hpp"

namespace swarmplan {

/// Monte Carlo experiment over a (point count x fleet size) grid.
struct ExperimentConfig {
  double area_width_m = 200.0;
  double area_height_m = 200.0;
  std::vector<int> point_counts{100};
  std::vector<int> fleet_sizes{4};
  int runs_per_cell = 50;
  UavSpec fleet_template;
  Environment env;
  RadioConfig radio;
  PlannerConfig planner;
  /// Overrides every UAV's budget with the planner's per-scenario sentinel.
  bool unlimited_budgets = true;
  /// When set, each UAV's power efficiency is drawn uniformly from this
  /// range per run; otherwise the fleet is homogeneous in the template.
  std::optional<std::pair<double, double>> eta_range =
      std::make_pair(0.5, 0.9);
  std::uint64_t base_seed = 1;
  int jobs = 1;
  std::string out_dir = "results";

  void validate() const;
};

/// n points i.i.d. uniform over the area, base station at the origin as
/// point 0. Reproducible from the seed alone.
Scenario generate_scenario(int n_points, double area_width_m,
                           double area_height_m, std::uint64_t seed);

/// Per-cell-run seed; independent of iteration order by construction.
std::uint64_t run_seed(std::uint64_t base_seed, int n_points, int fleet_size,
                       int run);

/// K copies of the template, with per-UAV efficiency sampling and the
/// unlimited-budget override applied.
std::vector<UavSpec> make_fleet(const ExperimentConfig& cfg,
                                std::uint64_t seed, int fleet_size);

/// One shadowing sample per scenario point (empty when shadowing is off).
std::vector<double> make_shadow(const RadioConfig& radio, std::uint64_t seed,
                                int point_count);

struct RunRow {
  int n = 0;
  int k = 0;
  int run = 0;
  std::string planner;  // "proposed" or "baseline"
  double total_j = 0.0;
  double flight_j = 0.0;
  double hover_tx_j = 0.0;
  double inspection_time_s = 0.0;
  bool feasible = false;
  double plan_wall_ms = 0.0;
  double plan_cost_j = 0.0;
  bool valid = false;  // validator agreed with the planner's outcome
};

struct ExperimentOutput {
  std::vector<RunRow> rows;
  bool all_valid = true;
};

/// Runs every (N, K, run) cell with both planners, validating each result.
/// Cells may execute on cfg.jobs worker threads; rows come back in a fixed
/// deterministic order either way.
ExperimentOutput run_experiment_cells(const ExperimentConfig& cfg);

/// The rows as a CSV document (schema in the README), full precision.
std::string results_csv(const ExperimentOutput& out);

/// Cells + all output files (results.csv, per-figure aggregates,
/// summary.json). Returns 0, or 1 when any row failed validation.
int run_experiment(const ExperimentConfig& cfg);

}  // namespace swarmplan
