#pragma once

namespace swarmplan::defaults {

// Reference quadrotor and uplink channel parameters. These are the values
// every config type defaults to; experiments override them from JSON.

inline constexpr double kBodyMassKg = 1.07;
inline constexpr double kBatteryMassKg = 1.0;
inline constexpr double kAirDensityKgM3 = 1.225;
inline constexpr double kGravityMps2 = 9.81;
inline constexpr double kDragForceN = 9.6998;
inline constexpr int kRotorCount = 4;
inline constexpr double kRotorDiameterM = 0.254;
inline constexpr double kPowerEfficiency = 0.70;
inline constexpr double kGroundSpeedMps = 1.49;

inline constexpr double kPacketBits = 20e6;
inline constexpr double kRateRequirementBps = 5e6;
inline constexpr double kBandwidthHz = 1e6;
inline constexpr double kNoiseDensityWPerHz = 4.002e-18;

// The channel geometry constants are ours: loss at the 1 m reference
// distance and a free-space-like slope per decade of distance.
inline constexpr double kReferenceLossDb = 40.0;
inline constexpr double kPathlossSlopeDb = 20.0;

}  // namespace swarmplan::defaults
