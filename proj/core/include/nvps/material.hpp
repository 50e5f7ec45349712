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

#ifndef NVPS_MATERIAL_HPP
#define NVPS_MATERIAL_HPP

#include <complex>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nvps::plasmonics {

enum class Interpolation { kLinear, kPchip };

/// Tabulated complex relative permittivity of a metal versus photon energy.
///
/// Lookups interpolate the real and imaginary parts independently in photon
/// energy, linearly by default or with a monotone cubic (PCHIP). Requests
/// outside the tabulated range throw RangeError; nothing is extrapolated.
class MaterialTable {
 public:
  MaterialTable(std::string name, std::vector<double> energies_ev,
                std::vector<std::complex<double>> permittivity,
                Interpolation interpolation = Interpolation::kLinear);

  /// CSV with header `energy_eV,eps_real,eps_imag`; '#' lines are comments.
  static MaterialTable from_csv(const std::filesystem::path& path, std::string name,
                                Interpolation interpolation = Interpolation::kLinear);

  const std::string& name() const { return name_; }
  Interpolation interpolation() const { return interpolation_; }
  std::span<const double> energies_ev() const { return energies_; }
  std::span<const std::complex<double>> permittivities() const { return eps_; }
  double min_energy_ev() const { return energies_.front(); }
  double max_energy_ev() const { return energies_.back(); }

  std::complex<double> permittivity_at_energy(double energy_ev) const;
  /// Same lookup keyed by angular frequency (rad/s).
  std::complex<double> permittivity(double angular_frequency) const;

  std::string to_csv() const;

 private:
  std::string name_;
  std::vector<double> energies_;
  std::vector<std::complex<double>> eps_;
  Interpolation interpolation_;
  std::function<double(double)> spline_re_;
  std::function<double(double)> spline_im_;
};

}  // namespace nvps::plasmonics

#endif  // NVPS_MATERIAL_HPP
