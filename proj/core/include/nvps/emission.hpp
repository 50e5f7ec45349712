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

#ifndef NVPS_EMISSION_HPP
#define NVPS_EMISSION_HPP

#include <span>
#include <vector>

#include "nvps/nv_model.hpp"
#include "nvps/spectrum.hpp"

namespace nvps {

/// 1.5 - 2.1 eV, 601 points.
std::vector<double> default_emission_grid_ev();

struct SpectrumResult {
  std::vector<double> energy_ev;
  std::vector<double> total;  // per unit angular frequency
  std::vector<std::vector<double>> bands;
};

/// Steady-state emission spectrum of the model on a photon-energy grid.
/// `scale` multiplies every value (far-field collection factor).
SpectrumResult model_emission_spectrum(const NVModel& model, std::span<const double> energy_ev,
                                       FieldZone zone = FieldZone::kFar, double scale = 1.0);

struct ZplOptions {
  double half_window_ev = 0.010;
  int points = 201;
  /// Far-field collection factor applied to the particle spectrum.
  double far_field_scale = 0.78;
};

/// Ratio of ZPL-window emission, near particle (near-field spectrum times the
/// far-field scale) over the isolated reference.
double zpl_enhancement(const NVModel& model, const NVModel& reference, const ZplOptions& options = {});

/// Steady-state PL for each angle of the angle-resolved drive projection. The
/// setup must carry a particle with an angle mode.
std::vector<double> theta_scan(const NVSetup& setup, std::span<const double> theta, int threads = 1);

}  // namespace nvps

#endif  // NVPS_EMISSION_HPP
