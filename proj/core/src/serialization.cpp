#include "swarmplan/serialization.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "swarmplan/errors.hpp"

namespace swarmplan {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
}

// get_or: typed field access with a default, rethrowing as ConfigError.
template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("field '") + key + "': " + e.what());
  }
}

json uav_to_json(const UavSpec& uav) {
  json j{{"body_mass_kg", uav.body_mass_kg},
         {"battery_mass_kg", uav.battery_mass_kg},
         {"rotor_count", uav.rotor_count},
         {"rotor_diameter_m", uav.rotor_diameter_m},
         {"power_efficiency", uav.power_efficiency},
         {"ground_speed_mps", uav.ground_speed_mps},
         {"drag_force_n", uav.drag_force_n}};
  if (uav.has_finite_budget())
    j["energy_budget_j"] = uav.energy_budget_j;
  else
    j["energy_budget_j"] = "unlimited";
  return j;
}

UavSpec uav_from_json(const json& j) {
  UavSpec uav;
  uav.body_mass_kg = get_or(j, "body_mass_kg", uav.body_mass_kg);
  uav.battery_mass_kg = get_or(j, "battery_mass_kg", uav.battery_mass_kg);
  uav.rotor_count = get_or(j, "rotor_count", uav.rotor_count);
  uav.rotor_diameter_m = get_or(j, "rotor_diameter_m", uav.rotor_diameter_m);
  uav.power_efficiency = get_or(j, "power_efficiency", uav.power_efficiency);
  uav.ground_speed_mps = get_or(j, "ground_speed_mps", uav.ground_speed_mps);
  uav.drag_force_n = get_or(j, "drag_force_n", uav.drag_force_n);
  if (j.contains("energy_budget_j")) {
    const json& b = j.at("energy_budget_j");
    if (b.is_string() && b.get<std::string>() == "unlimited")
      uav.energy_budget_j = UavSpec::unlimited_budget();
    else if (b.is_number())
      uav.energy_budget_j = b.get<double>();
    else
      throw ConfigError("energy_budget_j: number or \"unlimited\"");
  }
  return uav;
}

json env_to_json(const Environment& env) {
  return json{{"air_density_kg_m3", env.air_density_kg_m3},
              {"gravity_mps2", env.gravity_mps2},
              {"pitch_angle_rad", env.pitch_angle_rad}};
}

Environment env_from_json(const json& j) {
  Environment env;
  env.air_density_kg_m3 = get_or(j, "air_density_kg_m3", env.air_density_kg_m3);
  env.gravity_mps2 = get_or(j, "gravity_mps2", env.gravity_mps2);
  env.pitch_angle_rad = get_or(j, "pitch_angle_rad", env.pitch_angle_rad);
  return env;
}

json radio_to_json(const RadioConfig& cfg) {
  json shadow{{"mode", cfg.shadowing.mode == ShadowingSpec::Mode::gaussian
                           ? "gaussian"
                           : "none"}};
  if (cfg.shadowing.mode == ShadowingSpec::Mode::gaussian)
    shadow["sigma_db"] = cfg.shadowing.sigma_db;
  return json{{"reference_loss_db", cfg.reference_loss_db},
              {"pathloss_slope_db", cfg.pathloss_slope_db},
              {"shadowing", shadow},
              {"bandwidth_hz", cfg.bandwidth_hz},
              {"noise_density_w_per_hz", cfg.noise_density_w_per_hz},
              {"rate_requirement_bps", cfg.rate_requirement_bps},
              {"packet_bits", cfg.packet_bits},
              {"bs_location",
               json{{"x1", cfg.bs_location.x1}, {"x2", cfg.bs_location.x2}}}};
}

RadioConfig radio_from_json(const json& j) {
  RadioConfig cfg;
  cfg.reference_loss_db = get_or(j, "reference_loss_db", cfg.reference_loss_db);
  cfg.pathloss_slope_db = get_or(j, "pathloss_slope_db", cfg.pathloss_slope_db);
  cfg.bandwidth_hz = get_or(j, "bandwidth_hz", cfg.bandwidth_hz);
  cfg.noise_density_w_per_hz =
      get_or(j, "noise_density_w_per_hz", cfg.noise_density_w_per_hz);
  cfg.rate_requirement_bps =
      get_or(j, "rate_requirement_bps", cfg.rate_requirement_bps);
  cfg.packet_bits = get_or(j, "packet_bits", cfg.packet_bits);
  if (j.contains("shadowing")) {
    const json& s = j.at("shadowing");
    const std::string mode = get_or<std::string>(s, "mode", "none");
    if (mode == "gaussian") {
      cfg.shadowing.mode = ShadowingSpec::Mode::gaussian;
      cfg.shadowing.sigma_db = get_or(s, "sigma_db", 0.0);
    } else if (mode != "none") {
      throw ConfigError("shadowing.mode: \"none\" or \"gaussian\"");
    }
  }
  if (j.contains("bs_location")) {
    const json& b = j.at("bs_location");
    cfg.bs_location.x1 = get_or(b, "x1", 0.0);
    cfg.bs_location.x2 = get_or(b, "x2", 0.0);
  }
  return cfg;
}

json planner_cfg_to_json(const PlannerConfig& cfg) {
  json j{{"lambda", cfg.lambda},
         {"delta_e_j", cfg.delta_e_j},
         {"max_vertices", cfg.max_vertices}};
  if (!cfg.budget_overrides.empty()) j["budget_overrides"] = cfg.budget_overrides;
  return j;
}

PlannerConfig planner_cfg_from_json(const json& j) {
  PlannerConfig cfg;
  cfg.lambda = get_or(j, "lambda", cfg.lambda);
  cfg.delta_e_j = get_or(j, "delta_e_j", cfg.delta_e_j);
  cfg.max_vertices = get_or(j, "max_vertices", cfg.max_vertices);
  cfg.budget_overrides =
      get_or(j, "budget_overrides", cfg.budget_overrides);
  return cfg;
}

}  // namespace

std::string scenario_to_json(const Scenario& sc) {
  json points = json::array();
  for (const Point& p : sc.points)
    points.push_back(json{{"id", p.id}, {"x1", p.x1}, {"x2", p.x2}});
  const json j{{"seed", sc.seed},
               {"area", json{{"w", sc.area_width_m}, {"h", sc.area_height_m}}},
               {"points", points}};
  return j.dump(2) + "\n";
}

Scenario scenario_from_json(const std::string& text) {
  const json j = parse(text);
  Scenario sc;
  sc.seed = get_or<std::uint64_t>(j, "seed", 0);
  if (!j.contains("area") || !j.contains("points"))
    throw ConfigError("scenario: requires 'area' and 'points'");
  sc.area_width_m = get_or(j.at("area"), "w", 0.0);
  sc.area_height_m = get_or(j.at("area"), "h", 0.0);
  for (const json& p : j.at("points")) {
    Point point;
    point.id = get_or(p, "id", -1);
    point.x1 = get_or(p, "x1", 0.0);
    point.x2 = get_or(p, "x2", 0.0);
    sc.points.push_back(point);
  }
  try {
    sc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return sc;
}

std::vector<UavSpec> fleet_from_json(const std::string& text) {
  const json j = parse(text);
  if (!j.is_array()) throw ConfigError("fleet: expected a JSON array");
  std::vector<UavSpec> fleet;
  for (const json& u : j) fleet.push_back(uav_from_json(u));
  return fleet;
}

std::string fleet_to_json(const std::vector<UavSpec>& fleet) {
  json j = json::array();
  for (const UavSpec& uav : fleet) j.push_back(uav_to_json(uav));
  return j.dump(2) + "\n";
}

std::string plan_to_json(const PlanDocument& doc) {
  json fleet = json::array();
  for (const UavSpec& uav : doc.fleet) fleet.push_back(uav_to_json(uav));

  json trajectories = json::array();
  for (std::size_t k = 0; k < doc.result.trajectories.size(); ++k) {
    const Trajectory& t = doc.result.trajectories[k];
    json vertices = json::array();
    for (const auto& [v, p] : t.parent)
      vertices.push_back(json{{"id", v},
                              {"parent", p},
                              {"cumulative_j", t.cumulative_energy.at(v)}});
    json entry{{"uav", static_cast<int>(k)},
               {"cost_j", doc.result.cost_j.at(k)},
               {"vertices", vertices}};
    const double budget = doc.result.budget_j.at(k);
    if (std::isfinite(budget))
      entry["budget_j"] = budget;
    else
      entry["budget_j"] = "unlimited";
    trajectories.push_back(std::move(entry));
  }

  json j{{"planner", doc.planner},
         {"fleet", fleet},
         {"env", env_to_json(doc.env)},
         {"radio", radio_to_json(doc.radio)},
         {"planner_config", planner_cfg_to_json(doc.planner_config)},
         {"feasible", doc.result.feasible},
         {"iterations", doc.result.iterations},
         {"wall_time_s", doc.result.wall_time_s},
         {"uncovered", doc.result.uncovered_points},
         {"trajectories", trajectories}};
  if (!doc.shadow_db.empty()) j["shadow_db"] = doc.shadow_db;
  return j.dump(2) + "\n";
}

PlanDocument plan_from_json(const std::string& text) {
  const json j = parse(text);
  PlanDocument doc;
  doc.planner = get_or<std::string>(j, "planner", "proposed");
  if (j.contains("fleet"))
    for (const json& u : j.at("fleet")) doc.fleet.push_back(uav_from_json(u));
  if (j.contains("env")) doc.env = env_from_json(j.at("env"));
  if (j.contains("radio")) doc.radio = radio_from_json(j.at("radio"));
  if (j.contains("planner_config"))
    doc.planner_config = planner_cfg_from_json(j.at("planner_config"));
  doc.shadow_db = get_or(j, "shadow_db", std::vector<double>{});

  doc.result.feasible = get_or(j, "feasible", false);
  doc.result.iterations = get_or<std::int64_t>(j, "iterations", 0);
  doc.result.wall_time_s = get_or(j, "wall_time_s", 0.0);
  doc.result.uncovered_points = get_or(j, "uncovered", std::vector<int>{});

  if (!j.contains("trajectories"))
    throw ConfigError("plan: requires 'trajectories'");
  for (const json& tj : j.at("trajectories")) {
    Trajectory t = Trajectory::rooted(get_or(tj, "uav", -1), 0);
    // Assign the stored maps directly so stored energies survive bit-exact.
    for (const json& vj : tj.at("vertices")) {
      const int v = get_or(vj, "id", -1);
      t.parent[v] = get_or(vj, "parent", -1);
      t.cumulative_energy[v] = get_or(vj, "cumulative_j", 0.0);
    }
    doc.result.trajectories.push_back(std::move(t));
    doc.result.cost_j.push_back(get_or(tj, "cost_j", 0.0));
    double budget = std::numeric_limits<double>::infinity();
    if (tj.contains("budget_j") && tj.at("budget_j").is_number())
      budget = tj.at("budget_j").get<double>();
    doc.result.budget_j.push_back(budget);
  }
  return doc;
}

std::string experiment_config_to_json(const ExperimentConfig& cfg) {
  json j{{"area", json{{"w", cfg.area_width_m}, {"h", cfg.area_height_m}}},
         {"point_counts", cfg.point_counts},
         {"fleet_sizes", cfg.fleet_sizes},
         {"runs_per_cell", cfg.runs_per_cell},
         {"fleet_template", uav_to_json(cfg.fleet_template)},
         {"env", env_to_json(cfg.env)},
         {"radio", radio_to_json(cfg.radio)},
         {"planner", planner_cfg_to_json(cfg.planner)},
         {"unlimited_budgets", cfg.unlimited_budgets},
         {"base_seed", cfg.base_seed},
         {"jobs", cfg.jobs},
         {"out_dir", cfg.out_dir}};
  if (cfg.eta_range)
    j["eta_range"] = json::array({cfg.eta_range->first, cfg.eta_range->second});
  else
    j["eta_range"] = nullptr;
  return j.dump(2) + "\n";
}

ExperimentConfig experiment_config_from_json(const std::string& text) {
  const json j = parse(text);
  ExperimentConfig cfg;
  if (j.contains("area")) {
    cfg.area_width_m = get_or(j.at("area"), "w", cfg.area_width_m);
    cfg.area_height_m = get_or(j.at("area"), "h", cfg.area_height_m);
  }
  cfg.point_counts = get_or(j, "point_counts", cfg.point_counts);
  cfg.fleet_sizes = get_or(j, "fleet_sizes", cfg.fleet_sizes);
  cfg.runs_per_cell = get_or(j, "runs_per_cell", cfg.runs_per_cell);
  if (j.contains("fleet_template"))
    cfg.fleet_template = uav_from_json(j.at("fleet_template"));
  if (j.contains("env")) cfg.env = env_from_json(j.at("env"));
  if (j.contains("radio")) cfg.radio = radio_from_json(j.at("radio"));
  if (j.contains("planner"))
    cfg.planner = planner_cfg_from_json(j.at("planner"));
  cfg.unlimited_budgets = get_or(j, "unlimited_budgets", cfg.unlimited_budgets);
  if (j.contains("eta_range")) {
    const json& r = j.at("eta_range");
    if (r.is_null()) {
      cfg.eta_range.reset();
    } else if (r.is_array() && r.size() == 2) {
      cfg.eta_range = std::make_pair(r[0].get<double>(), r[1].get<double>());
    } else {
      throw ConfigError("eta_range: null or [lo, hi]");
    }
  }
  cfg.base_seed = get_or<std::uint64_t>(j, "base_seed", cfg.base_seed);
  cfg.jobs = get_or(j, "jobs", cfg.jobs);
  cfg.out_dir = get_or(j, "out_dir", cfg.out_dir);
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
}

}  // namespace swarmplan
