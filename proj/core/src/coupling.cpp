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

#include "nvps/coupling.hpp"

#include <cmath>

#include "nvps/errors.hpp"

namespace nvps {

using plasmonics::Orientation;

void PlasmonicEnvironment::validate() const {
  particle.validate();
  geometry.validate(particle);
  if (angle && nonlinear_rabi) {
    throw ConfigError("the nonlinear Rabi term needs a canonical orientation, not an angle");
  }
}

double emission_angular_frequency(const NVParameters& nv, int k) {
  return nv.drive.zpl_angular_frequency() - nv.vibronic.phonon_angular_frequency(k);
}

EmitterCoupling EmitterCoupling::free_space(const NVParameters& nv) {
  EmitterCoupling c;
  const double nb = nv.drive.background_index;
  for (int k = 0; k < nv.vibronic.size(); ++k) {
    c.emission_rates.push_back(nb * nv.vibronic.free_decay_rate(k));
    c.nonradiative_rates.push_back(0.0);
    c.quantum_efficiency.push_back(1.0);
  }
  return c;
}

EmitterCoupling EmitterCoupling::near_particle(const NVParameters& nv,
                                               const PlasmonicEnvironment& env) {
  env.validate();
  const double nb = env.particle.background_index();
  if (std::abs(nv.drive.background_index - nb) > 1e-9 * nb) {
    throw ConfigError("drive background index differs from sqrt(eps_b) of the particle medium");
  }
  const double R = env.geometry.separation;
  EmitterCoupling c;
  c.drive_polarizability = env.particle.polarizability(nv.drive.angular_frequency());

  double radial_weight = env.geometry.orientation == Orientation::kRadial ? 1.0 : 0.0;
  if (env.angle) {
    const auto proj = plasmonics::angle_projected_rabi(*env.angle, R, c.drive_polarizability);
    c.rabi_scale = proj.rabi_scale;
    radial_weight = proj.radial_weight;
  } else {
    c.rabi_scale = plasmonics::rabi_factor(env.geometry.orientation, c.drive_polarizability, R);
  }

  for (int k = 0; k < nv.vibronic.size(); ++k) {
    const double w = emission_angular_frequency(nv, k);
    const auto alpha = env.particle.polarizability(w);
    double ratio = 0.0, nr_ratio = 0.0;
    for (auto o : {Orientation::kRadial, Orientation::kTangential}) {
      const double weight = o == Orientation::kRadial ? radial_weight : 1.0 - radial_weight;
      if (weight == 0.0) continue;
      ratio += weight * plasmonics::decay_rate_ratio(o, w, R, alpha, nb);
      nr_ratio += weight * plasmonics::nonradiative_rate_ratio(o, w, R, alpha, nb);
    }
    const double gf = nv.vibronic.free_decay_rate(k);
    const double gamma = ratio * gf;
    const double gamma_nr = nr_ratio * gf;
    c.emission_rates.push_back(gamma);
    c.nonradiative_rates.push_back(gamma_nr);
    c.quantum_efficiency.push_back(plasmonics::relative_quantum_efficiency(gamma, gamma_nr));
  }

  if (env.nonlinear_rabi) {
    const double screening = nv.drive.screening();
    for (int k = 0; k < nv.vibronic.size(); ++k) {
      c.nonlinear_coefficients.push_back(plasmonics::nonlinear_rabi_coefficient(
          dipole_moment(nv.vibronic, nv.drive.base_dipole, k), env.geometry.orientation,
          c.drive_polarizability, R, screening, env.particle.background_permittivity));
    }
  }
  return c;
}

}  // namespace nvps
