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

#include "nvps/plasmonics.hpp"

#include <cmath>
#include <sstream>

#include "nvps/errors.hpp"
#include "nvps/units.hpp"

namespace nvps::plasmonics {

namespace {
constexpr cplx kI{0.0, 1.0};
}

void ParticleConfig::validate() const {
  if (!material) throw ConfigError("particle has no material table");
  if (!(radius > 0.0)) throw ConfigError("particle radius must be > 0");
  if (!(background_permittivity >= 1.0)) throw ConfigError("background permittivity must be >= 1");
}

double ParticleConfig::background_index() const { return std::sqrt(background_permittivity); }

cplx ParticleConfig::polarizability(double angular_frequency) const {
  const cplx eps_m = material->permittivity(angular_frequency);
  const cplx alpha_l = quasistatic_polarizability(eps_m, background_permittivity, radius);
  return corrected_polarizability(alpha_l,
                                  background_wavenumber(angular_frequency, background_index()));
}

void CouplingGeometry::validate(const ParticleConfig& particle) const {
  if (!(separation > particle.radius)) {
    throw ConfigError("centre separation R must exceed the particle radius");
  }
}

double background_wavenumber(double angular_frequency, double background_index) {
  return background_index * angular_frequency / units::kSpeedOfLight;
}

cplx quasistatic_polarizability(cplx eps_m, double eps_b, double radius) {
  const cplx den = eps_m + 2.0 * eps_b;
  if (std::abs(den) <= 1e-12 * std::max(1.0, std::abs(eps_b))) {
    std::ostringstream msg;
    msg << "polarizability pole: |eps_m + 2 eps_b| = " << std::abs(den);
    throw NumericError(msg.str());
  }
  if (std::isinf(eps_m.real()) || std::isinf(eps_m.imag())) return radius * radius * radius;
  return radius * radius * radius * (eps_m - eps_b) / den;
}

cplx corrected_polarizability(cplx alpha_l, double k_b) {
  return alpha_l / (1.0 - (2.0 / 3.0) * kI * k_b * k_b * k_b * alpha_l);
}

cplx rabi_factor(Orientation orientation, cplx alpha, double separation) {
  return 1.0 + orientation_sign(orientation) * alpha / std::pow(separation, 3);
}

cplx nonlinear_rabi_coefficient(double dipole, Orientation orientation, cplx alpha,
                                double separation, double screening, double eps_b) {
  const double s = orientation_sign(orientation);
  return dipole * s * s * alpha /
         (units::kHbar * 4.0 * units::kPi * units::kVacuumPermittivity * eps_b * screening *
          screening * std::pow(separation, 6));
}

double decay_rate_ratio(Orientation orientation, double angular_frequency, double separation,
                        cplx alpha, double background_index) {
  const double k = background_wavenumber(angular_frequency, background_index);
  const double x = k * separation;
  const cplx phase = std::exp(2.0 * kI * x);
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
  cplx series;
  double weight;
  if (orientation == Orientation::kRadial) {
    series = -1.0 / x4 + 2.0 / (kI * x5) + 1.0 / x6;
    weight = 6.0;
  } else {
    series = 1.0 / x2 - 2.0 / (kI * x3) - 3.0 / x4 + 2.0 / (kI * x5) + 1.0 / x6;
    weight = 1.5;
  }
  return background_index * (1.0 + weight * k * k * k * std::imag(alpha * phase * series));
}

double nonradiative_rate_ratio(Orientation orientation, double angular_frequency,
                               double separation, cplx alpha, double background_index) {
  const double k = background_wavenumber(angular_frequency, background_index);
  const double k3 = k * k * k;
  const double x = k * separation;
  const double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
  const double kernel = alpha.imag() - (2.0 / 3.0) * k3 * std::norm(alpha);
  if (orientation == Orientation::kRadial) {
    return 6.0 * background_index * k3 * kernel * (1.0 / x6 + 1.0 / x4);
  }
  return 1.5 * background_index * k3 * kernel * (1.0 / x6 - 1.0 / x4 + 1.0 / x2);
}

double relative_quantum_efficiency(double gamma, double gamma_nr) {
  if (!(gamma > 0.0)) throw ModelConsistencyError("total decay rate must be > 0");
  // Rounding in the kernel can leave gamma_nr a few ulp below zero.
  if (gamma_nr < 0.0 && gamma_nr > -1e-12 * gamma) gamma_nr = 0.0;
  if (gamma_nr < 0.0 || gamma_nr > gamma) {
    std::ostringstream msg;
    msg << "nonradiative rate " << gamma_nr << " outside [0, " << gamma << "]";
    throw ModelConsistencyError(msg.str());
  }
  return (gamma - gamma_nr) / gamma;
}

AngleProjection angle_projected_rabi(const AngleMode& mode, double separation, cplx alpha) {
  // Particle axis z; polarization plane x-z. n is the NV axis, t the in-plane
  // direction of the NV dipole plane orthogonal to n.
  const double b = mode.nv_axis_angle;
  const double nx = std::sin(b), nz = std::cos(b);
  const double tx = -std::cos(b), tz = std::sin(b);
  const double ex = std::cos(mode.theta) * nx + std::sin(mode.theta) * tx;
  const double ez = std::cos(mode.theta) * nz + std::sin(mode.theta) * tz;
  const cplx a = alpha / std::pow(separation, 3);
  // Static dipole field at the NV: radial part 2 a, tangential part -a.
  const cplx fx = ex - a * ex;
  const cplx fz = ez + 2.0 * a * ez;
  return {fx * tx + fz * tz, tz * tz};
}

double plasmon_peak_energy(const ParticleConfig& particle, double step_ev) {
  particle.validate();
  if (!(step_ev > 0.0)) throw DomainError("scan step must be > 0");
  const double lo = particle.material->min_energy_ev();
  const double hi = particle.material->max_energy_ev();
  double best_e = lo;
  double best = -1.0;
  const auto steps = static_cast<long>(std::floor((hi - lo) / step_ev));
  for (long i = 0; i <= steps; ++i) {
    const double e = std::min(hi, lo + static_cast<double>(i) * step_ev);
    const double mag = std::abs(particle.polarizability(units::ev_to_angular(e)));
    if (mag > best) {
      best = mag;
      best_e = e;
    }
  }
  return best_e;
}

}  // namespace nvps::plasmonics
