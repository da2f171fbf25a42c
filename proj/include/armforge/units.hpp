#pragma once

namespace armforge::units {

// Standard gravity, used for every moment/torque computation.
inline constexpr double kGravity = 9.80665; // m/s^2

// The suction-gripper weight rating divides holding force by 9.81 by
// convention; kept separate from kGravity so the two never drift together.
inline constexpr double kSuctionWeightDivisor = 9.81; // m/s^2

inline constexpr double kInch = 0.0254;          // m
inline constexpr double kKgCmToNewtonMeter = 0.0980665;

constexpr double inches(double in) { return in * kInch; }
constexpr double to_inches(double m) { return m / kInch; }

constexpr double kgcm_to_newton_meter(double kgcm) { return kgcm * kKgCmToNewtonMeter; }
constexpr double newton_meter_to_kgcm(double nm) { return nm / kKgCmToNewtonMeter; }

} // namespace armforge::units
