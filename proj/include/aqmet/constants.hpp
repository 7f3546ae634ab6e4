#pragma once

#include <numbers>

// Physical constants of the chloroform two-spin register and the unit
// bridge between laboratory seconds and the dimensionless simulation time.

namespace aqmet {

// Scalar J-coupling of the 13C-1H pair, Hz.
inline constexpr double kCouplingHz = 214.5;

// Gyromagnetic ratios, rad s^-1 T^-1. Spin 1 is 1H, spin 2 is 13C.
inline constexpr double kGammaH = 267.522e6;
inline constexpr double kGammaC = 67.283e6;

// One simulation time unit is 2/(pi J) seconds.
inline constexpr double time_unit_seconds(double j_hz = kCouplingHz) {
  return 2.0 / (std::numbers::pi * j_hz);
}

inline constexpr double seconds_to_sim(double seconds,
                                       double j_hz = kCouplingHz) {
  return seconds / time_unit_seconds(j_hz);
}

}  // namespace aqmet
