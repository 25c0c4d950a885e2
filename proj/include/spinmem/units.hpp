#pragma once

#include <cmath>

namespace spinmem {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Bohr and nuclear magnetons divided by Planck's constant, in Hz/T.
inline constexpr double bohr_magneton_hz_per_tesla = 1.3996244936e10;
inline constexpr double nuclear_magneton_hz_per_tesla = 7.622593285e6;

// 31P nuclear g-factor.
inline constexpr double g_factor_31p = 2.26320;

inline double hz_to_rad(double f) { return two_pi * f; }
inline double rad_to_hz(double w) { return w / two_pi; }
inline double deg_to_rad(double d) { return d * (two_pi / 360.0); }
inline double rad_to_deg(double r) { return r * (360.0 / two_pi); }

}  // namespace spinmem
