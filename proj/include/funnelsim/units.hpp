#pragma once

#include "funnelsim/constants.hpp"

// Reporting-layer unit conversions. Internal energies are joules; the
// reporting layer talks in h*MHz and k_B*uK.

namespace funnelsim::units {

inline double joules_to_hz(double u) { return u / constants::planck_h; }
inline double hz_to_joules(double f) { return f * constants::planck_h; }
inline double joules_to_mhz(double u) { return u / constants::planck_h * 1e-6; }
inline double joules_to_uk(double u) { return u / constants::k_boltzmann * 1e6; }
inline double uk_to_joules(double t) { return t * 1e-6 * constants::k_boltzmann; }
inline double rad_to_mhz(double w) { return w / (2.0 * 3.14159265358979323846) * 1e-6; }
inline double mhz_to_rad(double f) { return f * 1e6 * 2.0 * 3.14159265358979323846; }

}  // namespace funnelsim::units
