#pragma once

#include <string>
#include <vector>

#include "swarmplan/experiment.hpp"
#include "swarmplan/oracle.hpp"

namespace swarmplan {

// JSON codecs for the file formats the tools speak. Parse problems and
// schema violations surface as ConfigError.

std::string scenario_to_json(const Scenario& sc);
Scenario scenario_from_json(const std::string& text);

/// A JSON array of UAV specs (all fields optional, defaulted).
std::vector<UavSpec> fleet_from_json(const std::string& text);
std::string fleet_to_json(const std::vector<UavSpec>& fleet);

/// A plan plus everything needed to re-validate it: the fleet, the
/// environment, the channel model, and any shadowing samples.
struct PlanDocument {
  std::string planner;  // "proposed", "baseline", or "oracle"
  std::vector<UavSpec> fleet;
  Environment env;
  RadioConfig radio;
  PlannerConfig planner_config;
  std::vector<double> shadow_db;
  PlanResult result;
};

std::string plan_to_json(const PlanDocument& doc);
PlanDocument plan_from_json(const std::string& text);

std::string experiment_config_to_json(const ExperimentConfig& cfg);
ExperimentConfig experiment_config_from_json(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace swarmplan
