#include "swarmplan/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "swarmplan/rng.hpp"
#include "swarmplan/serialization.hpp"

namespace swarmplan {

namespace {

constexpr std::uint64_t kPointsTag = 0x706f696e7473ULL;
constexpr std::uint64_t kEtaTag = 0x657461ULL;
constexpr std::uint64_t kShadowTag = 0x736861646f77ULL;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (runs_per_cell < 1)
    throw std::invalid_argument("ExperimentConfig: runs_per_cell must be >= 1");
  if (point_counts.empty() || fleet_sizes.empty())
    throw std::invalid_argument(
        "ExperimentConfig: point_counts and fleet_sizes must be non-empty");
  for (int n : point_counts)
    if (n < 1)
      throw std::invalid_argument("ExperimentConfig: point counts must be >= 1");
  for (int k : fleet_sizes)
    if (k < 1)
      throw std::invalid_argument("ExperimentConfig: fleet sizes must be >= 1");
  if (!(area_width_m > 0.0) || !(area_height_m > 0.0))
    throw std::invalid_argument("ExperimentConfig: area must be positive");
  if (jobs < 1)
    throw std::invalid_argument("ExperimentConfig: jobs must be >= 1");
  if (eta_range) {
    const auto [lo, hi] = *eta_range;
    if (!(lo > 0.0 && lo <= hi && hi <= 1.0))
      throw std::invalid_argument(
          "ExperimentConfig: eta_range must satisfy 0 < lo <= hi <= 1");
  }
  fleet_template.validate();
  env.validate();
  radio.validate();
  planner.validate();
}

Scenario generate_scenario(int n_points, double area_width_m,
                           double area_height_m, std::uint64_t seed) {
  if (n_points < 0)
    throw std::invalid_argument("generate_scenario: n_points must be >= 0");
  Scenario sc;
  sc.area_width_m = area_width_m;
  sc.area_height_m = area_height_m;
  sc.seed = seed;
  sc.points.push_back(Point{0.0, 0.0, 0});
  SplitMix64 rng(mix_seed(seed, kPointsTag));
  for (int i = 1; i <= n_points; ++i) {
    Point p;
    p.x1 = rng.next_unit() * area_width_m;
    p.x2 = rng.next_unit() * area_height_m;
    p.id = i;
    sc.points.push_back(p);
  }
  return sc;
}

std::uint64_t run_seed(std::uint64_t base_seed, int n_points, int fleet_size,
                       int run) {
  std::uint64_t s = mix_seed(base_seed, static_cast<std::uint64_t>(n_points));
  s = mix_seed(s, static_cast<std::uint64_t>(fleet_size));
  return mix_seed(s, static_cast<std::uint64_t>(run));
}

std::vector<UavSpec> make_fleet(const ExperimentConfig& cfg,
                                std::uint64_t seed, int fleet_size) {
  std::vector<UavSpec> fleet(fleet_size, cfg.fleet_template);
  if (cfg.unlimited_budgets)
    for (UavSpec& uav : fleet) uav.energy_budget_j = UavSpec::unlimited_budget();
  if (cfg.eta_range) {
    SplitMix64 rng(mix_seed(seed, kEtaTag));
    for (UavSpec& uav : fleet)
      uav.power_efficiency = rng.next_in(cfg.eta_range->first,
                                         cfg.eta_range->second);
  }
  return fleet;
}

std::vector<double> make_shadow(const RadioConfig& radio, std::uint64_t seed,
                                int point_count) {
  if (radio.shadowing.mode != ShadowingSpec::Mode::gaussian) return {};
  std::vector<double> shadow(point_count);
  SplitMix64 rng(mix_seed(seed, kShadowTag));
  for (double& s : shadow) s = radio.shadowing.sigma_db * rng.next_gaussian();
  return shadow;
}

ExperimentOutput run_experiment_cells(const ExperimentConfig& cfg) {
  cfg.validate();

  struct Cell {
    int n, k, run;
  };
  std::vector<Cell> cells;
  for (int n : cfg.point_counts)
    for (int k : cfg.fleet_sizes)
      for (int run = 0; run < cfg.runs_per_cell; ++run)
        cells.push_back({n, k, run});

  // Two rows per cell, proposed first; slots are pre-sized so worker
  // scheduling cannot affect output order.
  ExperimentOutput out;
  out.rows.resize(cells.size() * 2);
  std::atomic<bool> all_valid{true};
  std::atomic<std::size_t> next{0};

  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell cell = cells[i];
      const std::uint64_t seed = run_seed(cfg.base_seed, cell.n, cell.k,
                                          cell.run);
      const Scenario sc = generate_scenario(cell.n, cfg.area_width_m,
                                            cfg.area_height_m, seed);
      const std::vector<UavSpec> fleet = make_fleet(cfg, seed, cell.k);
      const std::vector<double> shadow =
          make_shadow(cfg.radio, seed, static_cast<int>(sc.points.size()));

      const auto evaluate = [&](const PlanResult& result,
                                const char* name) -> RunRow {
        const FeasibilityReport report =
            validate_plan(sc, fleet, cfg.env, cfg.radio, result, shadow);
        const MetricsReport metrics =
            energy_breakdown(result, sc, fleet, cfg.env, cfg.radio, shadow);
        RunRow row;
        row.n = cell.n;
        row.k = cell.k;
        row.run = cell.run;
        row.planner = name;
        row.total_j = metrics.total_energy_j;
        row.flight_j = metrics.flight_energy_j;
        row.hover_tx_j = metrics.hover_tx_energy_j;
        row.inspection_time_s = metrics.inspection_time_s;
        row.feasible = result.feasible;
        row.plan_wall_ms = result.wall_time_s * 1e3;
        row.plan_cost_j = metrics.planning_cost_j;
        row.valid = report.costs_match && report.disjoint_ok &&
                    (result.feasible == report.ok());
        if (!row.valid) all_valid.store(false);
        return row;
      };

      out.rows[2 * i] =
          evaluate(plan(sc, fleet, cfg.env, cfg.radio, cfg.planner, shadow),
                   "proposed");
      out.rows[2 * i + 1] = evaluate(
          plan_nearest_neighbor(sc, fleet, cfg.env, cfg.radio, seed, shadow),
          "baseline");
    }
  };

  const int jobs = std::min<int>(cfg.jobs, static_cast<int>(cells.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  out.all_valid = all_valid.load();
  return out;
}

std::string results_csv(const ExperimentOutput& out) {
  std::ostringstream csv;
  csv << "N,K,run,planner,total_J,flight_J,hover_tx_J,inspection_time_s,"
         "feasible,plan_wall_ms,plan_cost_J\n";
  for (const RunRow& r : out.rows) {
    csv << r.n << ',' << r.k << ',' << r.run << ',' << r.planner << ','
        << fmt(r.total_j) << ',' << fmt(r.flight_j) << ',' << fmt(r.hover_tx_j)
        << ',' << fmt(r.inspection_time_s) << ',' << (r.feasible ? 1 : 0)
        << ',' << fmt(r.plan_wall_ms) << ',' << fmt(r.plan_cost_j) << '\n';
  }
  return csv.str();
}

namespace {

struct Aggregate {
  double total_j = 0.0;
  double flight_j = 0.0;
  double hover_tx_j = 0.0;
  double plan_cost_j = 0.0;
  double time_s = 0.0;
  int count = 0;
};

using AggKey = std::tuple<int, int, std::string>;  // (N, K, planner)

std::map<AggKey, Aggregate> aggregate_rows(const ExperimentOutput& out) {
  std::map<AggKey, Aggregate> agg;
  for (const RunRow& r : out.rows) {
    Aggregate& a = agg[{r.n, r.k, r.planner}];
    a.total_j += r.total_j;
    a.flight_j += r.flight_j;
    a.hover_tx_j += r.hover_tx_j;
    a.plan_cost_j += r.plan_cost_j;
    a.time_s += r.inspection_time_s;
    ++a.count;
  }
  return agg;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg) {
  const ExperimentOutput out = run_experiment_cells(cfg);
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);

  write_text_file((dir / "results.csv").string(), results_csv(out));

  const auto agg = aggregate_rows(out);
  std::ostringstream fig1, fig2, fig3, fig4, fig6;
  fig1 << "N,K,planner,mean_total_J,mean_plan_cost_J\n";
  fig2 << "N,K,planner,mean_inspection_time_s\n";
  fig3 << "N,K,planner,mean_flight_J\n";
  fig4 << "N,K,planner,mean_hover_tx_J\n";
  fig6 << "N,K,planner,mean_inspection_time_s\n";
  for (const auto& [key, a] : agg) {
    const auto& [n, k, planner] = key;
    const double c = a.count;
    fig1 << n << ',' << k << ',' << planner << ',' << fmt(a.total_j / c) << ','
         << fmt(a.plan_cost_j / c) << '\n';
    fig2 << n << ',' << k << ',' << planner << ',' << fmt(a.time_s / c) << '\n';
    fig3 << n << ',' << k << ',' << planner << ',' << fmt(a.flight_j / c)
         << '\n';
    fig4 << n << ',' << k << ',' << planner << ',' << fmt(a.hover_tx_j / c)
         << '\n';
    fig6 << n << ',' << k << ',' << planner << ',' << fmt(a.time_s / c) << '\n';
  }
  write_text_file((dir / "fig1_energy_vs_k.csv").string(), fig1.str());
  write_text_file((dir / "fig2_time_vs_k.csv").string(), fig2.str());
  write_text_file((dir / "fig3_flight_vs_k.csv").string(), fig3.str());
  write_text_file((dir / "fig4_hover_tx_vs_k.csv").string(), fig4.str());
  write_text_file((dir / "fig6_time_vs_n.csv").string(), fig6.str());

  std::ostringstream fig5;
  fig5 << "N,K,planner,run,inspection_time_s\n";
  for (const RunRow& r : out.rows)
    fig5 << r.n << ',' << r.k << ',' << r.planner << ',' << r.run << ','
         << fmt(r.inspection_time_s) << '\n';
  write_text_file((dir / "fig5_cdf_samples.csv").string(), fig5.str());

  std::ostringstream summary;
  summary << "{\n  \"all_valid\": " << (out.all_valid ? "true" : "false")
          << ",\n  \"rows\": " << out.rows.size() << ",\n  \"cells\": [\n";
  bool first = true;
  for (const auto& [key, a] : agg) {
    const auto& [n, k, planner] = key;
    if (!first) summary << ",\n";
    first = false;
    const double c = a.count;
    summary << "    {\"N\": " << n << ", \"K\": " << k << ", \"planner\": \""
            << planner << "\", \"runs\": " << a.count
            << ", \"mean_total_J\": " << fmt(a.total_j / c)
            << ", \"mean_flight_J\": " << fmt(a.flight_j / c)
            << ", \"mean_hover_tx_J\": " << fmt(a.hover_tx_j / c)
            << ", \"mean_plan_cost_J\": " << fmt(a.plan_cost_j / c)
            << ", \"mean_inspection_time_s\": " << fmt(a.time_s / c) << "}";
  }
  summary << "\n  ]\n}\n";
  write_text_file((dir / "summary.json").string(), summary.str());

  return out.all_valid ? 0 : 1;
}

}  // namespace swarmplan
