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

#include "nvps/nv_model.hpp"

#include <array>
#include <cmath>

#include "nvps/errors.hpp"
#include "nvps/photoluminescence.hpp"
#include "nvps/steady_state.hpp"

namespace nvps {

namespace {

constexpr int kMaxFeedbackIterations = 200;

EmitterCoupling make_coupling(const NVSetup& s) {
  return s.plasmonics ? EmitterCoupling::near_particle(s.nv, *s.plasmonics)
                      : EmitterCoupling::free_space(s.nv);
}

}  // namespace

void NVSetup::validate() const {
  nv.validate();
  if (plasmonics) plasmonics->validate();
}

NVSetup reference_setup(const NVSetup& setup) {
  NVSetup ref = setup;
  ref.plasmonics.reset();
  ref.nv.drive.background_index = 1.0;
  return ref;
}

NVModel::NVModel(NVSetup setup)
    : setup_(std::move(setup)),
      scheme_(LevelScheme::build(setup_.nv.max_band(), setup_.nv.vibronic)),
      coupling_((setup_.validate(), make_coupling(setup_))),
      channels_(build_collapse_channels(scheme_, setup_.nv, coupling_.emission_rates)),
      base_(build_liouvillian(0.0, 0.0)),
      microwave_term_(Liouvillian::diagonal_commutator(microwave_detuning_generator(scheme_))) {}

RabiTable NVModel::rabi_table(std::complex<double> feedback) const {
  RabiTable t = RabiTable::screened(setup_.nv, coupling_.rabi_scale);
  if (feedback == 0.0 || coupling_.nonlinear_coefficients.empty()) return t;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k <= scheme_.max_band(); ++k) {
      for (Spin m : kSpins) {
        t.set(j, k, m, t.at(j, k, m) + coupling_.nonlinear_coefficients[static_cast<std::size_t>(k)] * feedback);
      }
    }
  }
  return t;
}

Liouvillian NVModel::build_liouvillian(double microwave_angular_frequency,
                                       std::complex<double> feedback) const {
  NVParameters nv = setup_.nv;
  nv.spin.microwave_angular_frequency = microwave_angular_frequency;
  return Liouvillian::build(build_hamiltonian(scheme_, nv, rabi_table(feedback), setup_.hamiltonian),
                            channels_);
}

Eigen::MatrixXcd NVModel::hamiltonian(double microwave_angular_frequency) const {
  NVParameters nv = setup_.nv;
  nv.spin.microwave_angular_frequency = microwave_angular_frequency;
  return build_hamiltonian(scheme_, nv, rabi_table(0.0), setup_.hamiltonian);
}

Liouvillian NVModel::liouvillian(double microwave_angular_frequency) const {
  return base_.plus(microwave_term_, microwave_angular_frequency);
}

Liouvillian NVModel::liouvillian() const {
  return liouvillian(setup_.nv.spin.microwave_angular_frequency);
}

DensityOperator NVModel::steady_state(double microwave_angular_frequency) const {
  if (coupling_.nonlinear_coefficients.empty()) {
    return nvps::steady_state(liouvillian(microwave_angular_frequency));
  }
  // Self-feedback: Omega = Omega_lin + eta_k P with P = sum mu_k rho_{e_j m, g_k m}.
  std::complex<double> p = 0.0;
  for (int it = 0; it < kMaxFeedbackIterations; ++it) {
    const DensityOperator rho =
        nvps::steady_state(build_liouvillian(microwave_angular_frequency, p));
    std::complex<double> next = 0.0;
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k <= scheme_.max_band(); ++k) {
        const double mu = dipole_moment(setup_.nv.vibronic, setup_.nv.drive.base_dipole, k);
        for (Spin m : kSpins) next += mu * rho.matrix()(scheme_.excited(j, m), scheme_.ground(k, m));
      }
    }
    if (std::abs(next - p) <= 1e-12 * std::max(std::abs(next), 1e-300)) return rho;
    p = next;
  }
  throw SolverError("self-feedback Rabi iteration did not converge");
}

DensityOperator NVModel::steady_state() const {
  return steady_state(setup_.nv.spin.microwave_angular_frequency);
}

double NVModel::pl(const DensityOperator& rho) const {
  return pl_rate(scheme_, rho, coupling_.emission_rates, coupling_.quantum_efficiency);
}

DensityOperator NVModel::spin_zero_state() const {
  return DensityOperator::pure(scheme_.dim(), scheme_.ground(0, Spin::kZero));
}

DensityOperator NVModel::spin_pm1_state() const {
  const std::array<int, 2> idx = {scheme_.ground(0, Spin::kPlus), scheme_.ground(0, Spin::kMinus)};
  return DensityOperator::mixture(scheme_.dim(), idx);
}

}  // namespace nvps
