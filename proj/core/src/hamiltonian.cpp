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

#include "nvps/hamiltonian.hpp"

#include <string>

#include "nvps/errors.hpp"
#include "nvps/units.hpp"

namespace nvps {

RabiTable::RabiTable(int max_band)
    : n_(max_band), values_(static_cast<std::size_t>(2 * (max_band + 1) * 3)) {
  if (max_band < 0) throw ConfigError("max band must be >= 0");
}

RabiTable RabiTable::screened(const NVParameters& nv, cplx scale) {
  RabiTable t(nv.max_band());
  const double e0 = nv.drive.field_amplitude();
  const double screening = nv.drive.screening();
  for (int k = 0; k <= nv.max_band(); ++k) {
    const double mu = dipole_moment(nv.vibronic, nv.drive.base_dipole, k);
    const cplx omega = mu * e0 * scale / (units::kHbar * screening);
    for (int j = 0; j < 2; ++j) {
      for (Spin m : kSpins) t.set(j, k, m, omega);
    }
  }
  return t;
}

std::size_t RabiTable::slot(int j, int k, Spin m) const {
  if (j < 0 || j > 1 || k < 0 || k > n_) {
    throw RangeError("no optical pair e" + std::to_string(j) + " <-> g" + std::to_string(k));
  }
  return static_cast<std::size_t>((j * (n_ + 1) + k) * 3 + spin_slot(m));
}

void RabiTable::set(int j, int k, Spin m, cplx omega) { values_[slot(j, k, m)] = omega; }

std::optional<cplx> RabiTable::get(int j, int k, Spin m) const { return values_[slot(j, k, m)]; }

cplx RabiTable::at(int j, int k, Spin m) const {
  const auto v = get(j, k, m);
  if (!v) {
    throw AssemblyError("missing Rabi frequency for e" + std::to_string(j) + " <-> g" +
                        std::to_string(k) + ", m = " + std::to_string(static_cast<int>(m)));
  }
  return *v;
}

bool RabiTable::complete() const {
  for (const auto& v : values_) {
    if (!v) return false;
  }
  return true;
}

Matrix build_hamiltonian(const LevelScheme& scheme, const NVParameters& nv, const RabiTable& rabi,
                         const HamiltonianOptions& options) {
  const int n = scheme.max_band();
  if (rabi.max_band() != n || nv.max_band() != n) {
    throw AssemblyError("Rabi table, parameters and level scheme disagree on the band count");
  }
  const double hbar = units::kHbar;
  const int dim = scheme.dim();
  Matrix h = Matrix::Zero(dim, dim);

  const auto z = zeeman_frequencies(nv.spin);
  const double w_mu = nv.spin.microwave_angular_frequency;
  const double omega_mu = spin_rabi_frequency(nv.spin.microwave_amplitude);

  auto spin_block = [&](Level level, double w_plus, double w_minus) {
    const int p = scheme.index(level, Spin::kPlus);
    const int o = scheme.index(level, Spin::kZero);
    const int m = scheme.index(level, Spin::kMinus);
    h(p, p) += hbar * (w_plus - w_mu);
    h(m, m) += hbar * (w_minus - w_mu);
    for (int s : {p, m}) {
      h(o, s) += hbar * omega_mu;
      h(s, o) += hbar * omega_mu;
    }
  };
  auto orbital_energy = [&](Level level, double energy) {
    for (Spin s : kSpins) h(scheme.index(level, s), scheme.index(level, s)) += energy;
  };

  const double wd = nv.drive.angular_frequency();
  const double wz = nv.drive.zpl_angular_frequency();
  for (int k = 0; k <= n; ++k) {
    spin_block(Level::ground(k), z.ground_plus, z.ground_minus);
    orbital_energy(Level::ground(k), hbar * nv.vibronic.phonon_angular_frequency(k));
  }
  for (int j = 0; j < 2; ++j) spin_block(Level::excited(j), z.excited_plus, z.excited_minus);
  orbital_energy(Level::excited(0), hbar * (wz - wd));

  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k <= n; ++k) {
      for (Spin m : kSpins) {
        const cplx omega = rabi.at(j, k, m);
        if (options.ground_only_drive && k > 0) continue;
        const int e = scheme.excited(j, m);
        const int g = scheme.ground(k, m);
        h(e, g) += -hbar * omega;
        h(g, e) += -hbar * std::conj(omega);
      }
    }
  }

  const double w_s1 = wz - nv.isc.excited_singlet_gap / hbar;
  const double w_s0 = w_s1 - nv.isc.singlet_gap / hbar;
  h(scheme.upper_singlet(), scheme.upper_singlet()) = hbar * (w_s1 - wd);
  h(scheme.lower_singlet(), scheme.lower_singlet()) = hbar * (w_s0 - wd);
  return h;
}

Eigen::VectorXd microwave_detuning_generator(const LevelScheme& scheme) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(scheme.dim());
  for (int slot = 0; slot < scheme.orbital_count(); ++slot) {
    d(3 * slot + spin_slot(Spin::kPlus)) = -units::kHbar;
    d(3 * slot + spin_slot(Spin::kMinus)) = -units::kHbar;
  }
  return d;
}

}  // namespace nvps
