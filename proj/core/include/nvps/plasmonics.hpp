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

#ifndef NVPS_PLASMONICS_HPP
#define NVPS_PLASMONICS_HPP

#include <complex>
#include <memory>

#include "nvps/material.hpp"

namespace nvps::plasmonics {

using cplx = std::complex<double>;

/// Dipole orientation relative to the particle-NV axis.
enum class Orientation {
  kTangential,  // NV dipole plane parallel to the particle surface (NV parallel)
  kRadial,      // dipole along the particle-NV axis (NV perpendicular)
};

/// s_alpha: +2 for radial, -1 for tangential.
constexpr double orientation_sign(Orientation o) { return o == Orientation::kRadial ? 2.0 : -1.0; }

struct ParticleConfig {
  std::shared_ptr<const MaterialTable> material;
  double radius = 10e-9;                // r_m, m
  double background_permittivity = 1;  // eps_b

  void validate() const;
  double background_index() const;
  /// Finite-size corrected polarizability alpha(omega), m^3.
  cplx polarizability(double angular_frequency) const;
};

/// Angle mode: the polarization plane holds both the particle axis and the NV
/// axis. theta is measured from the NV axis to E_0; nv_axis_angle is the angle
/// between the NV axis and the particle axis.
struct AngleMode {
  double theta = 0.0;
  double nv_axis_angle = 1.5707963267948966;
};

struct CouplingGeometry {
  double separation = 20e-9;  // R, m (centre to centre)
  Orientation orientation = Orientation::kRadial;

  void validate(const ParticleConfig& particle) const;
};

double background_wavenumber(double angular_frequency, double background_index);

/// alpha_L = r^3 (eps_m - eps_b) / (eps_m + 2 eps_b). NumericError at the pole.
cplx quasistatic_polarizability(cplx eps_m, double eps_b, double radius);

/// alpha = alpha_L / (1 - (2i/3) k_b^3 alpha_L).
cplx corrected_polarizability(cplx alpha_l, double k_b);

/// F = 1 + s_alpha alpha / R^3.
cplx rabi_factor(Orientation orientation, cplx alpha, double separation);

/// Self-feedback coefficient eta in rad/s per (C m) of dipole.
cplx nonlinear_rabi_coefficient(double dipole, Orientation orientation, cplx alpha,
                                double separation, double screening, double eps_b);

/// gamma / gamma^f for a dipole near the particle, alpha evaluated at omega.
double decay_rate_ratio(Orientation orientation, double angular_frequency, double separation,
                        cplx alpha, double background_index);

/// gamma^NR / gamma^f.
double nonradiative_rate_ratio(Orientation orientation, double angular_frequency,
                               double separation, cplx alpha, double background_index);

/// Q = (gamma - gamma^NR) / gamma. ModelConsistencyError if gamma^NR > gamma.
double relative_quantum_efficiency(double gamma, double gamma_nr);

struct AngleProjection {
  cplx rabi_scale;       // replaces F, includes the sin(theta) projection of E_0
  double radial_weight;  // share of the radial (perpendicular) decay channel
};

/// Projects E_0 plus the particle's dipolar response field onto the NV dipole
/// plane within the polarization plane.
AngleProjection angle_projected_rabi(const AngleMode& mode, double separation, cplx alpha);

/// Photon energy (eV) of maximal |alpha| over the material table range.
double plasmon_peak_energy(const ParticleConfig& particle, double step_ev = 1e-4);

}  // namespace nvps::plasmonics

#endif  // NVPS_PLASMONICS_HPP
