#include "swarmplan/radio_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swarmplan {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("RadioConfig: ") + what);
}

}  // namespace

void RadioConfig::validate() const {
  require(bandwidth_hz > 0.0, "bandwidth must be > 0");
  require(noise_density_w_per_hz > 0.0, "noise density must be > 0");
  require(rate_requirement_bps > 0.0, "rate requirement must be > 0");
  require(packet_bits > 0.0, "packet size must be > 0");
  require(pathloss_slope_db >= 0.0, "path loss slope must be >= 0");
  if (shadowing.mode == ShadowingSpec::Mode::gaussian)
    require(shadowing.sigma_db >= 0.0, "shadowing sigma must be >= 0");
}

std::atomic<std::uint64_t>& degenerate_distance_clamps() {
  static std::atomic<std::uint64_t> count{0};
  return count;
}

double path_loss_db(const Point& p, const RadioConfig& cfg, double shadow_db) {
  double d = distance(p, cfg.bs_location);
  if (d < kDistanceFloorM) {
    degenerate_distance_clamps().fetch_add(1, std::memory_order_relaxed);
    d = kDistanceFloorM;
  }
  return cfg.reference_loss_db + cfg.pathloss_slope_db * std::log10(d) +
         shadow_db;
}

double uplink_rate_bps(double tx_power_w, double loss_db,
                       const RadioConfig& cfg) {
  if (tx_power_w < 0.0) throw std::invalid_argument("tx power must be >= 0");
  const double gain = std::pow(10.0, -loss_db / 10.0);
  const double snr =
      tx_power_w * gain / (cfg.bandwidth_hz * cfg.noise_density_w_per_hz);
  return cfg.bandwidth_hz * std::log2(1.0 + snr);
}

double min_tx_power_w(const Point& p, const RadioConfig& cfg,
                      double shadow_db) {
  const double loss_db = path_loss_db(p, cfg, shadow_db);
  const double snr_required =
      std::exp2(cfg.rate_requirement_bps / cfg.bandwidth_hz) - 1.0;
  return cfg.bandwidth_hz * cfg.noise_density_w_per_hz * snr_required *
         std::pow(10.0, loss_db / 10.0);
}

double transmission_energy_j(const UavSpec& uav, const Point& p,
                             const RadioConfig& cfg, double shadow_db) {
  return cfg.air_time_s() * min_tx_power_w(p, cfg, shadow_db) /
         uav.power_efficiency;
}

}  // namespace swarmplan
