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

#ifndef NVPS_HAMILTONIAN_HPP
#define NVPS_HAMILTONIAN_HPP

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nvps/level_scheme.hpp"
#include "nvps/parameters.hpp"

namespace nvps {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Optical Rabi frequencies Omega_{e_j m, g_k m} in rad/s, one per coherent
/// pair. Entries start unset; build_hamiltonian refuses incomplete tables.
class RabiTable {
 public:
  explicit RabiTable(int max_band);

  /// Omega = mu_k E_0 scale / (hbar eps_effD) for every (j, k, m).
  static RabiTable screened(const NVParameters& nv, cplx scale);

  int max_band() const { return n_; }
  void set(int j, int k, Spin m, cplx omega);
  std::optional<cplx> get(int j, int k, Spin m) const;
  cplx at(int j, int k, Spin m) const;
  bool complete() const;

 private:
  std::size_t slot(int j, int k, Spin m) const;
  int n_;
  std::vector<std::optional<cplx>> values_;
};

struct HamiltonianOptions {
  /// Drop the coherent optical couplings of g_{k>0}, keeping only g_0 <-> e_j.
  bool ground_only_drive = false;
};

/// Rotating-frame NV Hamiltonian in joules.
Matrix build_hamiltonian(const LevelScheme& scheme, const NVParameters& nv, const RabiTable& rabi,
                         const HamiltonianOptions& options = {});

/// Diagonal of dH/d(omega_mu) in joules per rad/s: -hbar on every +-1 triplet
/// state, zero elsewhere.
Eigen::VectorXd microwave_detuning_generator(const LevelScheme& scheme);

}  // namespace nvps

#endif  // NVPS_HAMILTONIAN_HPP
