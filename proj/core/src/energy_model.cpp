#include "swarmplan/energy_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "swarmplan/errors.hpp"

namespace swarmplan {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidualTolRel = 1e-9;
constexpr int kBisectionCap = 200;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("UavSpec/Environment: ") + what);
}

// q r^2 pi rho, the rotor disc term shared by the momentum expressions.
double disc_term(const UavSpec& uav, const Environment& env) {
  return static_cast<double>(uav.rotor_count) * uav.rotor_diameter_m *
         uav.rotor_diameter_m * kPi * env.air_density_kg_m3;
}

}  // namespace

void UavSpec::validate() const {
  require(body_mass_kg > 0.0, "body mass must be > 0");
  require(battery_mass_kg > 0.0, "battery mass must be > 0");
  require(rotor_count >= 1, "rotor count must be >= 1");
  require(rotor_diameter_m > 0.0, "rotor diameter must be > 0");
  require(power_efficiency > 0.0 && power_efficiency <= 1.0,
          "power efficiency must be in (0, 1]");
  require(ground_speed_mps > 0.0, "ground speed must be > 0");
  require(drag_force_n >= 0.0, "drag force must be >= 0");
  require(energy_budget_j > 0.0, "energy budget must be > 0");
}

Environment::Environment()
    : pitch_angle_rad(default_pitch_angle(UavSpec{}, defaults::kGravityMps2)) {}

void Environment::validate() const {
  require(air_density_kg_m3 > 0.0, "air density must be > 0");
  require(gravity_mps2 > 0.0, "gravity must be > 0");
  require(pitch_angle_rad >= 0.0 && pitch_angle_rad < kPi / 2.0,
          "pitch angle must be in [0, pi/2)");
}

double default_pitch_angle(const UavSpec& uav, double gravity_mps2) {
  return std::atan(uav.drag_force_n / (uav.total_mass_kg() * gravity_mps2));
}

double thrust(const UavSpec& uav, const Environment& env) {
  return uav.total_mass_kg() * env.gravity_mps2 + uav.drag_force_n;
}

double hover_induced_velocity(const UavSpec& uav, const Environment& env,
                              double thrust_n) {
  return std::sqrt(2.0 * thrust_n / disc_term(uav, env));
}

double induced_velocity(const UavSpec& uav, const Environment& env,
                        double thrust_n, double ground_speed_mps) {
  if (!(thrust_n > 0.0)) throw std::invalid_argument("thrust must be > 0");
  if (ground_speed_mps < 0.0)
    throw std::invalid_argument("ground speed must be >= 0");

  // Residual of the momentum balance, monotone increasing in vh:
  //   f(vh) = vh * sqrt((v cos b)^2 + (v sin b + vh)^2) - 2T / (q r^2 pi rho)
  const double target = 2.0 * thrust_n / disc_term(uav, env);
  const double v_horiz = ground_speed_mps * std::cos(env.pitch_angle_rad);
  const double v_vert = ground_speed_mps * std::sin(env.pitch_angle_rad);
  const auto residual = [&](double vh) {
    return vh * std::hypot(v_horiz, v_vert + vh) - target;
  };

  const double vh_hover = hover_induced_velocity(uav, env, thrust_n);
  double lo = 0.0;               // residual(0) = -target < 0
  double hi = vh_hover * 10.0;   // root never exceeds vh_hover
  for (int it = 0; it < kBisectionCap; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double r = residual(mid);
    if (std::abs(r) < kResidualTolRel * target) return mid;
    if (r < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  throw NonConvergenceError("induced_velocity: bisection exceeded " +
                            std::to_string(kBisectionCap) + " iterations");
}

double min_flight_power(const UavSpec& uav, const Environment& env) {
  const double t = thrust(uav, env);
  const double vh = induced_velocity(uav, env, t, uav.ground_speed_mps);
  return (vh + uav.ground_speed_mps * std::sin(env.pitch_angle_rad)) * t;
}

double flight_power(const UavSpec& uav, const Environment& env) {
  return min_flight_power(uav, env) / uav.power_efficiency;
}

double flight_energy(const UavSpec& uav, const Environment& env,
                     double distance_m) {
  if (distance_m < 0.0) throw std::invalid_argument("distance must be >= 0");
  return min_flight_power(uav, env) * distance_m /
         (uav.ground_speed_mps * uav.power_efficiency);
}

double min_hover_power(const UavSpec& uav, const Environment& env) {
  const double t = thrust(uav, env);
  return t * std::sqrt(t) / std::sqrt(0.5 * disc_term(uav, env));
}

double hover_power(const UavSpec& uav, const Environment& env) {
  return min_hover_power(uav, env) / uav.power_efficiency;
}

}  // namespace swarmplan
