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

#ifndef NVPS_SWEEP_HPP
#define NVPS_SWEEP_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nvps/figures_of_merit.hpp"
#include "nvps/nv_model.hpp"

namespace nvps {

struct SweepRow {
  double intensity = 0.0;  // W/m^2
  /// Figures of merit with enhancements against the particle-free reference.
  std::optional<FiguresOfMerit> fom;
  std::optional<FiguresOfMerit> reference;
  /// Non-empty when this point failed; other rows are unaffected.
  std::string error;

  bool ok() const { return error.empty(); }
};

/// ODMR figures of merit of `setup` and of its reference at each intensity.
/// Rows come back in grid order.
std::vector<SweepRow> intensity_sweep(const NVSetup& setup, std::span<const double> intensity,
                                      std::span<const double> frequency_grid, int threads = 1,
                                      const FomOptions& options = {});

}  // namespace nvps

#endif  // NVPS_SWEEP_HPP
