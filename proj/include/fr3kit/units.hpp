// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace fr3 {

inline constexpr double kSpeedOfLight = 299792458.0;  // vacuum, m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

inline double wavelength_m(double frequency_hz) { return kSpeedOfLight / frequency_hz; }

/// sin(x)/x, continuous at the origin.
inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace fr3
