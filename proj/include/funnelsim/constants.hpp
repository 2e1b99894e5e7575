#pragma once

// Physical constants (CODATA 2018) and cesium D2 data used throughout.
// All internal quantities are SI: energies in joules, rates in rad/s,
// lengths in meters. Conversion helpers live in units.hpp.

namespace funnelsim::constants {

inline constexpr double c_light = 299792458.0;          // m/s
inline constexpr double epsilon0 = 8.8541878128e-12;    // F/m
inline constexpr double planck_h = 6.62607015e-34;      // J s
inline constexpr double hbar = planck_h / 6.283185307179586;
inline constexpr double k_boltzmann = 1.380649e-23;     // J/K
inline constexpr double g_gravity = 9.80665;            // m/s^2

// Polarizability atomic unit, C^2 m^2 / J
inline constexpr double alpha_atomic_unit = 1.64877727436e-41;

// Cesium-133
inline constexpr double cs_mass = 2.2069469e-25;            // kg
inline constexpr double cs_d2_wavelength = 852.34727582e-9; // m
inline constexpr double cs_d2_gamma = 2.0 * 3.14159265358979323846 * 5.2e6; // rad/s

// Trap beams
inline constexpr double lambda_red = 935.3e-9;  // bottom/top beam
inline constexpr double lambda_blue = 849.1e-9; // repulsive WGM

}  // namespace funnelsim::constants
