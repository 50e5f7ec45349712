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

#ifndef NVPS_SPECTRUM_HPP
#define NVPS_SPECTRUM_HPP

#include <span>
#include <vector>

#include "nvps/collapse.hpp"
#include "nvps/density_operator.hpp"
#include "nvps/liouvillian.hpp"

namespace nvps {

enum class FieldZone {
  kFar,   // band weights Q_k gamma_k
  kNear,  // band weights gamma_k
};

struct EmissionSpectrum {
  std::vector<double> angular_frequency;  // lab frame, rad/s
  std::vector<double> total;              // s^-1 per (rad/s)
  std::vector<std::vector<double>> bands;  // [k][i]
};

/// Incoherent emission spectrum from the regression theorem,
///   S_k(w) = 2 Re tr( s^H (i(w - w_d) - L)^{-1} [s rho - tr(s rho) rho] ),
/// summed over the emission channels s = sigma_{k,m} with weights gamma_k
/// (times Q_k in the far field). Integrating over w / 2 pi returns
/// sum_k weight_k (<s^H s> - |<s>|^2). The coherent (Rayleigh) part is excluded.
EmissionSpectrum emission_spectrum(const Liouvillian& l, const std::vector<CollapseChannel>& channels,
                                   const DensityOperator& rho_ss,
                                   std::span<const double> quantum_efficiency,
                                   double drive_angular_frequency,
                                   std::span<const double> angular_frequency_grid,
                                   FieldZone zone = FieldZone::kFar);

}  // namespace nvps

#endif  // NVPS_SPECTRUM_HPP
