// Copyright 2026 The nvps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NVPS_UNITS_HPP
#define NVPS_UNITS_HPP

#include <numbers>

/// SI constants (CODATA 2018) and the unit conversions used at the edges of
/// the library. Everything inside the library is SI: rad/s for angular
/// frequencies, 1/s for rates, J for energies, T for fields, C*m for dipoles.
namespace nvps::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPlanck = 6.62607015e-34;            // J s
inline constexpr double kHbar = kPlanck / (2.0 * kPi);       // J s
inline constexpr double kElementaryCharge = 1.602176634e-19; // C
inline constexpr double kBohrMagneton = 9.2740100783e-24;    // J/T
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kSpeedOfLight = 299792458.0;         // m/s
inline constexpr double kDebye = 1e-21 / kSpeedOfLight;      // C m
inline constexpr double kLandeG = 2.0;

constexpr double ev_to_joule(double ev) { return ev * kElementaryCharge; }
constexpr double joule_to_ev(double j) { return j / kElementaryCharge; }
constexpr double ev_to_angular(double ev) { return ev * kElementaryCharge / kHbar; }
constexpr double angular_to_ev(double w) { return w * kHbar / kElementaryCharge; }
constexpr double hz_to_angular(double f) { return 2.0 * kPi * f; }
constexpr double angular_to_hz(double w) { return w / (2.0 * kPi); }
constexpr double debye_to_si(double d) { return d * kDebye; }
constexpr double si_to_debye(double p) { return p / kDebye; }

/// Optical intensity in mW/um^2 to W/m^2.
constexpr double mw_per_um2_to_si(double i) { return i * 1e9; }
constexpr double si_to_mw_per_um2(double i) { return i * 1e-9; }

/// Free-space wavenumber for an angular frequency.
constexpr double wavenumber(double angular) { return angular / kSpeedOfLight; }

}  // namespace nvps::units

#endif  // NVPS_UNITS_HPP
