// swarmplan: energy-aware inspection path planning for UAV swarms.
//
// Subcommands: gen-scenario, plan, baseline, oracle, validate, experiment.
// Exit codes: 0 success, 1 validation failure, 2 configuration error.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "swarmplan/errors.hpp"
#include "swarmplan/serialization.hpp"

namespace {

using namespace swarmplan;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitConfig = 2;

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("expected a comma-separated list of numbers, got '" +
                        text + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

// Shared flags for the plan/baseline/oracle subcommands.
struct FleetOptions {
  int fleet_size = 1;
  std::string fleet_file;
  std::string budget = "unlimited";
  std::string eta;
  double lambda = 2.0;
  double delta_e = 0.0;
  int max_vertices = -1;
  double shadow_sigma_db = 0.0;
  std::uint64_t seed = 1;
  std::string scenario_file;
  std::string out_file;

  void attach(CLI::App* cmd, bool with_planner_knobs) {
    cmd->add_option("--scenario", scenario_file, "Scenario JSON file")
        ->required();
    cmd->add_option("-k,--fleet-size", fleet_size, "Number of UAVs");
    cmd->add_option("--fleet", fleet_file,
                    "JSON array of UAV specs (overrides --fleet-size)");
    cmd->add_option("--budget", budget,
                    "Per-UAV energy budgets in J (comma list, one value to "
                    "broadcast, or 'unlimited')");
    cmd->add_option("--eta", eta,
                    "Per-UAV power efficiency (comma list or one value)");
    if (with_planner_knobs) {
      cmd->add_option("--lambda", lambda, "Budget slack factor (>= 1)");
      cmd->add_option("--delta-e", delta_e,
                      "Budget increment per round in J (0 = auto)");
      cmd->add_option("--max-vertices", max_vertices,
                      "Cap on points per trajectory (-1 = no cap)");
    }
    cmd->add_option("--shadow-sigma", shadow_sigma_db,
                    "Gaussian shadowing sigma in dB (0 = off)");
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("-o,--out", out_file, "Output plan JSON (default stdout)");
  }

  std::vector<UavSpec> build_fleet() const {
    std::vector<UavSpec> fleet;
    if (!fleet_file.empty()) {
      fleet = fleet_from_json(read_text_file(fleet_file));
    } else {
      if (fleet_size < 1) throw ConfigError("--fleet-size must be >= 1");
      fleet.assign(fleet_size, UavSpec{});
    }
    if (budget == "unlimited") {
      for (UavSpec& uav : fleet)
        uav.energy_budget_j = UavSpec::unlimited_budget();
    } else {
      const std::vector<double> budgets = parse_double_list(budget);
      if (budgets.size() != 1 && budgets.size() != fleet.size())
        throw ConfigError("--budget: one value or one per UAV");
      for (std::size_t i = 0; i < fleet.size(); ++i)
        fleet[i].energy_budget_j = budgets[budgets.size() == 1 ? 0 : i];
    }
    if (!eta.empty()) {
      const std::vector<double> etas = parse_double_list(eta);
      if (etas.size() != 1 && etas.size() != fleet.size())
        throw ConfigError("--eta: one value or one per UAV");
      for (std::size_t i = 0; i < fleet.size(); ++i)
        fleet[i].power_efficiency = etas[etas.size() == 1 ? 0 : i];
    }
    return fleet;
  }

  RadioConfig build_radio() const {
    RadioConfig radio;
    if (shadow_sigma_db > 0.0) {
      radio.shadowing.mode = ShadowingSpec::Mode::gaussian;
      radio.shadowing.sigma_db = shadow_sigma_db;
    }
    return radio;
  }
};

void emit(const std::string& out_file, const std::string& text) {
  if (out_file.empty())
    std::cout << text;
  else
    write_text_file(out_file, text);
}

void report_clamps() {
  const std::uint64_t clamps = degenerate_distance_clamps().load();
  if (clamps > 0)
    std::cerr << "note: " << clamps
              << " link evaluation(s) clamped to the 1 m distance floor\n";
}

int cmd_gen_scenario(int n, double area_w, double area_h, std::uint64_t seed,
                     const std::string& out_file) {
  const Scenario sc = generate_scenario(n, area_w, area_h, seed);
  emit(out_file, scenario_to_json(sc));
  return kExitOk;
}

int run_planner(const FleetOptions& opt, const std::string& which) {
  const Scenario sc = scenario_from_json(read_text_file(opt.scenario_file));
  const std::vector<UavSpec> fleet = opt.build_fleet();
  const Environment env;
  const RadioConfig radio = opt.build_radio();
  const std::vector<double> shadow =
      make_shadow(radio, opt.seed, static_cast<int>(sc.points.size()));

  PlanDocument doc;
  doc.planner = which;
  doc.fleet = fleet;
  doc.env = env;
  doc.radio = radio;
  doc.shadow_db = shadow;
  doc.planner_config.lambda = opt.lambda;
  doc.planner_config.delta_e_j = opt.delta_e;
  doc.planner_config.max_vertices = opt.max_vertices;

  if (which == "proposed") {
    doc.result = plan(sc, fleet, env, radio, doc.planner_config, shadow);
  } else if (which == "baseline") {
    doc.result = plan_nearest_neighbor(sc, fleet, env, radio, opt.seed, shadow);
  } else {
    doc.result = oracle_as_plan(exact_plan(sc, fleet, env, radio, shadow),
                                fleet);
  }

  const FeasibilityReport report =
      validate_plan(sc, fleet, env, radio, doc.result, shadow);
  emit(opt.out_file, plan_to_json(doc));
  report_clamps();

  double total_cost = 0.0;
  for (double v : doc.result.cost_j) total_cost += v;
  std::cerr << which << ": " << (doc.result.feasible ? "feasible" : "INFEASIBLE")
            << ", total cost " << total_cost << " J, wall "
            << doc.result.wall_time_s * 1e3 << " ms\n";

  const bool consistent = report.costs_match && report.disjoint_ok &&
                          (doc.result.feasible == report.ok());
  return consistent ? kExitOk : kExitValidation;
}

int cmd_validate(const std::string& scenario_file,
                 const std::string& plan_file) {
  const Scenario sc = scenario_from_json(read_text_file(scenario_file));
  const PlanDocument doc = plan_from_json(read_text_file(plan_file));
  const FeasibilityReport report = validate_plan(
      sc, doc.fleet, doc.env, doc.radio, doc.result, doc.shadow_db);

  std::cout << "coverage:   " << (report.coverage_ok ? "ok" : "FAIL") << "\n"
            << "disjoint:   " << (report.disjoint_ok ? "ok" : "FAIL") << "\n"
            << "budgets:    " << (report.budgets_ok ? "ok" : "FAIL") << "\n"
            << "costs:      " << (report.costs_match ? "ok" : "FAIL")
            << " (max rel mismatch " << report.max_cost_mismatch_rel << ")\n";
  if (!report.missing_points.empty()) {
    std::cout << "missing points:";
    for (int v : report.missing_points) std::cout << ' ' << v;
    std::cout << "\n";
  }
  if (!report.duplicated_points.empty()) {
    std::cout << "duplicated points:";
    for (int v : report.duplicated_points) std::cout << ' ' << v;
    std::cout << "\n";
  }
  if (!report.over_budget_uavs.empty()) {
    std::cout << "over-budget UAVs:";
    for (int k : report.over_budget_uavs) std::cout << ' ' << k;
    std::cout << "\n";
  }

  const bool consistent = report.costs_match && report.disjoint_ok &&
                          (doc.result.feasible == report.ok());
  std::cout << (consistent ? "PASS" : "FAIL") << "\n";
  return consistent ? kExitOk : kExitValidation;
}

int cmd_experiment(const std::string& config_file, const std::string& out_dir,
                   int jobs, std::uint64_t seed, bool seed_set) {
  ExperimentConfig cfg = experiment_config_from_json(read_text_file(config_file));
  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (jobs > 0) cfg.jobs = jobs;
  if (seed_set) cfg.base_seed = seed;
  const int rc = run_experiment(cfg);
  report_clamps();
  std::cerr << "experiment: results in " << cfg.out_dir
            << (rc == 0 ? "" : " (VALIDATION FAILURES)") << "\n";
  return rc == 0 ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-aware inspection path planning for UAV swarms"};
  app.require_subcommand(1);

  // gen-scenario
  auto* gen = app.add_subcommand("gen-scenario",
                                 "Sample a uniform random scenario");
  int gen_n = 100;
  double gen_w = 200.0, gen_h = 200.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("-n,--points", gen_n, "Number of inspection points");
  gen->add_option("--width", gen_w, "Area width in m");
  gen->add_option("--height", gen_h, "Area height in m");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  FleetOptions plan_opt, base_opt, oracle_opt;
  auto* plan_cmd = app.add_subcommand("plan", "Run the swarm planner");
  plan_opt.attach(plan_cmd, true);
  auto* base_cmd =
      app.add_subcommand("baseline", "Run the nearest-neighbor baseline");
  base_opt.attach(base_cmd, false);
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Exact solver for desk-scale instances (N <= 8, K <= 3)");
  oracle_opt.attach(oracle_cmd, false);

  auto* val_cmd = app.add_subcommand("validate", "Re-check a stored plan");
  std::string val_scenario, val_plan;
  val_cmd->add_option("--scenario", val_scenario, "Scenario JSON")->required();
  val_cmd->add_option("--plan", val_plan, "Plan JSON")->required();

  auto* exp_cmd =
      app.add_subcommand("experiment", "Monte Carlo experiment grid");
  std::string exp_config, exp_out;
  int exp_jobs = 0;
  std::uint64_t exp_seed = 0;
  exp_cmd->add_option("--config", exp_config, "Experiment config JSON")
      ->required();
  exp_cmd->add_option("-o,--out", exp_out, "Output directory override");
  exp_cmd->add_option("-j,--jobs", exp_jobs,
                      "Parallel scenario workers (0 = config value)");
  auto* seed_opt = exp_cmd->add_option("--seed", exp_seed, "Base seed override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed())
      return cmd_gen_scenario(gen_n, gen_w, gen_h, gen_seed, gen_out);
    if (plan_cmd->parsed()) return run_planner(plan_opt, "proposed");
    if (base_cmd->parsed()) return run_planner(base_opt, "baseline");
    if (oracle_cmd->parsed()) return run_planner(oracle_opt, "oracle");
    if (val_cmd->parsed()) return cmd_validate(val_scenario, val_plan);
    if (exp_cmd->parsed())
      return cmd_experiment(exp_config, exp_out, exp_jobs, exp_seed,
                            seed_opt->count() > 0);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitConfig;
}
