#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>

#include "swarmplan/defaults.hpp"
#include "swarmplan/energy_model.hpp"

namespace swarmplan {

/// A planar location. Index 0 of a scenario is the base station.
struct Point {
  double x1 = 0.0;  // m
  double x2 = 0.0;  // m
  int id = -1;
};

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x1 - b.x1, a.x2 - b.x2);
}

struct ShadowingSpec {
  enum class Mode { none, gaussian };
  Mode mode = Mode::none;
  double sigma_db = 0.0;  // used when mode == gaussian
};

/// Shared uplink channel model. Bandwidth is orthogonal per UAV, so each
/// transmitter sees the full configured bandwidth and no interference.
struct RadioConfig {
  double reference_loss_db = defaults::kReferenceLossDb;  // L0 at 1 m
  double pathloss_slope_db = defaults::kPathlossSlopeDb;  // per decade
  ShadowingSpec shadowing;
  double bandwidth_hz = defaults::kBandwidthHz;
  double noise_density_w_per_hz = defaults::kNoiseDensityWPerHz;
  double rate_requirement_bps = defaults::kRateRequirementBps;  // R_th
  double packet_bits = defaults::kPacketBits;                   // B
  Point bs_location{0.0, 0.0, 0};

  /// Over-the-air dwell per inspection point, tau = B / R_th.
  double air_time_s() const { return packet_bits / rate_requirement_bps; }

  void validate() const;
};

/// Links shorter than this are clamped before the log-distance evaluation;
/// each clamp bumps degenerate_distance_clamps().
inline constexpr double kDistanceFloorM = 1.0;

/// Process-wide count of link evaluations that hit the distance floor.
std::atomic<std::uint64_t>& degenerate_distance_clamps();

/// Log-distance path loss in dB: L0 + slope * log10(dist) + shadow.
double path_loss_db(const Point& p, const RadioConfig& cfg,
                    double shadow_db = 0.0);

/// Achievable uplink rate at transmit power `tx_power_w` through loss
/// `loss_db`: w log2(1 + p 10^(-L/10) / (w N0)).
double uplink_rate_bps(double tx_power_w, double loss_db,
                       const RadioConfig& cfg);

/// Smallest transmit power meeting the configured rate requirement from
/// point `p`: w N0 (2^(R_th/w) - 1) 10^(L/10).
double min_tx_power_w(const Point& p, const RadioConfig& cfg,
                      double shadow_db = 0.0);

/// Energy to push one packet from `p`: tau * p_t_min / eta.
double transmission_energy_j(const UavSpec& uav, const Point& p,
                             const RadioConfig& cfg, double shadow_db = 0.0);

}  // namespace swarmplan
