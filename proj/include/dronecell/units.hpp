#pragma once

#include <cmath>
#include <numbers>

namespace dronecell {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// ln(10)/10: converts a dB-domain exponent into a natural-log exponent.
inline constexpr double kDbToNeper = std::numbers::ln10 / 10.0;

/// Upper edge of the LoS-probability model domain, 75 degrees off nadir.
inline constexpr double kMaxOffNadirAngle = 5.0 * std::numbers::pi / 12.0;

/// Largest admissible antenna beamwidth; keeps half the beam inside the LoS model domain.
inline constexpr double kMaxBeamwidth = 2.0 * kMaxOffNadirAngle;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace dronecell
