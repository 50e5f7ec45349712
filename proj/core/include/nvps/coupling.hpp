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

#ifndef NVPS_COUPLING_HPP
#define NVPS_COUPLING_HPP

#include <complex>
#include <optional>
#include <vector>

#include "nvps/parameters.hpp"
#include "nvps/plasmonics.hpp"

namespace nvps {

struct PlasmonicEnvironment {
  plasmonics::ParticleConfig particle;
  plasmonics::CouplingGeometry geometry;
  /// When set, replaces geometry.orientation by the angle-resolved projection.
  std::optional<plasmonics::AngleMode> angle;
  bool nonlinear_rabi = false;

  void validate() const;
};

/// Everything the dynamics layer needs from the electromagnetic environment.
/// Rates are per band k and shared by the three spin projections.
struct EmitterCoupling {
  std::complex<double> rabi_scale{1.0, 0.0};
  std::vector<double> emission_rates;      // gamma_k, 1/s
  std::vector<double> nonradiative_rates;  // gamma_k^NR, 1/s
  std::vector<double> quantum_efficiency;  // Q_k
  /// eta_k (rad/s per unit of rho_eg); empty when the self-feedback term is off.
  std::vector<std::complex<double>> nonlinear_coefficients;
  std::complex<double> drive_polarizability{0.0, 0.0};

  int band_count() const { return static_cast<int>(emission_rates.size()); }

  /// Isolated NV in the background medium: gamma_k = n_b gamma^f_k, Q = 1.
  static EmitterCoupling free_space(const NVParameters& nv);
  /// NV next to a particle. The drive's background index must equal
  /// sqrt(eps_b) of the particle environment.
  static EmitterCoupling near_particle(const NVParameters& nv, const PlasmonicEnvironment& env);
};

/// omega_k^em = omega_z - omega_k.
double emission_angular_frequency(const NVParameters& nv, int k);

}  // namespace nvps

#endif  // NVPS_COUPLING_HPP
