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

#ifndef NVPS_NV_MODEL_HPP
#define NVPS_NV_MODEL_HPP

#include <optional>
#include <vector>

#include "nvps/collapse.hpp"
#include "nvps/coupling.hpp"
#include "nvps/density_operator.hpp"
#include "nvps/hamiltonian.hpp"
#include "nvps/level_scheme.hpp"
#include "nvps/liouvillian.hpp"
#include "nvps/parameters.hpp"

namespace nvps {

/// Physical setup of one simulation: NV parameters plus an optional particle.
struct NVSetup {
  NVParameters nv;
  std::optional<PlasmonicEnvironment> plasmonics;
  HamiltonianOptions hamiltonian;

  void validate() const;
};

/// Same NV and drive without the particle, in free space (n_b = 1).
NVSetup reference_setup(const NVSetup& setup);

/// Assembled model. Immutable after construction and safe to share across
/// threads.
class NVModel {
 public:
  explicit NVModel(NVSetup setup);

  const NVSetup& setup() const { return setup_; }
  const LevelScheme& scheme() const { return scheme_; }
  const EmitterCoupling& coupling() const { return coupling_; }
  const std::vector<CollapseChannel>& channels() const { return channels_; }

  /// Hamiltonian and Liouvillian at a given microwave angular frequency.
  Eigen::MatrixXcd hamiltonian(double microwave_angular_frequency) const;
  Liouvillian liouvillian(double microwave_angular_frequency) const;
  /// At the setup's own microwave frequency.
  Liouvillian liouvillian() const;

  /// Steady state; iterates the self-feedback Rabi term to a fixed point when
  /// enabled.
  DensityOperator steady_state(double microwave_angular_frequency) const;
  DensityOperator steady_state() const;

  double pl(const DensityOperator& rho) const;

  /// g_0 |0> and the equal |+1>/|-1> mixture in g_0.
  DensityOperator spin_zero_state() const;
  DensityOperator spin_pm1_state() const;

 private:
  RabiTable rabi_table(std::complex<double> feedback) const;
  Liouvillian build_liouvillian(double microwave_angular_frequency, std::complex<double> feedback) const;

  NVSetup setup_;
  LevelScheme scheme_;
  EmitterCoupling coupling_;
  std::vector<CollapseChannel> channels_;
  Liouvillian base_;  // microwave frequency zero, no feedback
  SparseMatrix microwave_term_;
};

}  // namespace nvps

#endif  // NVPS_NV_MODEL_HPP
