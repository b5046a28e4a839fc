#pragma once

#include <cmath>
#include <limits>

#include "swarmplan/defaults.hpp"

namespace swarmplan {

/// Physical and power-efficiency parameters of one UAV.
struct UavSpec {
  double body_mass_kg = defaults::kBodyMassKg;
  double battery_mass_kg = defaults::kBatteryMassKg;
  int rotor_count = defaults::kRotorCount;
  double rotor_diameter_m = defaults::kRotorDiameterM;
  double power_efficiency = defaults::kPowerEfficiency;  // eta, in (0, 1]
  double ground_speed_mps = defaults::kGroundSpeedMps;
  double drag_force_n = defaults::kDragForceN;
  /// Energy budget E_th. Infinity means the budget is not binding; the
  /// planner substitutes a per-scenario sentinel for such UAVs.
  double energy_budget_j = unlimited_budget();

  static constexpr double unlimited_budget() {
    return std::numeric_limits<double>::infinity();
  }

  double total_mass_kg() const { return body_mass_kg + battery_mass_kg; }
  bool has_finite_budget() const { return std::isfinite(energy_budget_j); }

  /// Throws std::invalid_argument when any field is out of range.
  void validate() const;
};

/// Ambient conditions shared by the whole fleet. The pitch angle is frozen
/// per environment rather than varied with speed.
struct Environment {
  double air_density_kg_m3 = defaults::kAirDensityKgM3;
  double gravity_mps2 = defaults::kGravityMps2;
  double pitch_angle_rad;  // beta, in [0, pi/2)

  Environment();
  Environment(double rho, double g, double beta)
      : air_density_kg_m3(rho), gravity_mps2(g), pitch_angle_rad(beta) {}

  void validate() const;
};

/// Pitch that tilts thrust enough to supply the UAV's constant drag force:
/// beta = atan(f_d / (m g)).
double default_pitch_angle(const UavSpec& uav, double gravity_mps2);

/// Required thrust: total weight plus drag, T = m g + f_d.
double thrust(const UavSpec& uav, const Environment& env);

/// Rotor downwash speed producing thrust `thrust_n` at ground speed
/// `ground_speed_mps`: the positive root of
///   vh * q r^2 pi rho * sqrt((v cos b)^2 + (v sin b + vh)^2) = 2 T,
/// solved by safeguarded bisection (relative residual < 1e-9).
/// Throws NonConvergenceError past the iteration cap.
double induced_velocity(const UavSpec& uav, const Environment& env,
                        double thrust_n, double ground_speed_mps);

/// Closed-form induced velocity at hover: sqrt(2T / (q r^2 pi rho)).
double hover_induced_velocity(const UavSpec& uav, const Environment& env,
                              double thrust_n);

/// Minimum mechanical power in forward motion, (vh + v sin b) T.
double min_flight_power(const UavSpec& uav, const Environment& env);

/// Electrical flight power, min_flight_power / eta.
double flight_power(const UavSpec& uav, const Environment& env);

/// Energy to traverse `distance_m` at cruise: p_f_min * d / (v eta).
double flight_energy(const UavSpec& uav, const Environment& env,
                     double distance_m);

/// Minimum mechanical hover power, T sqrt(T) / sqrt(0.5 pi q r^2 rho).
double min_hover_power(const UavSpec& uav, const Environment& env);

/// Electrical hover power, min_hover_power / eta.
double hover_power(const UavSpec& uav, const Environment& env);

}  // namespace swarmplan
