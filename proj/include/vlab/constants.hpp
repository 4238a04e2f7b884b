#pragma once

#include <numbers>

namespace vlab::constants {

// CODATA 2018 table shared by every module. c, h and eV are exact by
// definition since the 2019 SI redefinition.
inline constexpr double c_light = 299792458.0;            // m/s
inline constexpr double h_planck = 6.62607015e-34;        // J*s
inline constexpr double hbar = h_planck / (2.0 * std::numbers::pi);
inline constexpr double electron_volt = 1.602176634e-19;  // J
inline constexpr double electron_mass = 9.1093837015e-31; // kg

} // namespace vlab::constants
