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

#ifndef NVPS_ODMR_HPP
#define NVPS_ODMR_HPP

#include <span>
#include <vector>

#include "nvps/nv_model.hpp"

namespace nvps {

struct OdmrCurve {
  std::vector<double> frequency;  // microwave frequency, Hz
  std::vector<double> pl;         // photons / s

  /// Strictly increasing grid, matching lengths, PL > 0.
  void validate() const;
};

/// 2.60 - 3.14 GHz, 271 points.
std::vector<double> default_odmr_grid();

/// Evenly spaced grid including both ends.
std::vector<double> linear_grid(double first, double last, int points);

/// Steady-state PL at each microwave frequency (Hz). Solver failures are
/// rethrown as SolverError naming the offending frequency.
OdmrCurve odmr_sweep(const NVModel& model, std::span<const double> frequency_grid, int threads = 1);

}  // namespace nvps

#endif  // NVPS_ODMR_HPP
