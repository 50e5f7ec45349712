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

#ifndef NVPS_FIGURES_OF_MERIT_HPP
#define NVPS_FIGURES_OF_MERIT_HPP

#include <optional>
#include <vector>

#include "nvps/odmr.hpp"

namespace nvps {

struct FomOptions {
  /// Share of the grid, at each end, averaged into the baseline.
  double baseline_margin = 0.10;
  /// A dip is a run of points below baseline - threshold * depth.
  double dip_threshold = 0.3;
};

struct Dip {
  double center = 0.0;  // Hz
  double fwhm = 0.0;    // Hz
  double depth = 0.0;   // baseline - local minimum
  double min_pl = 0.0;
  bool fitted = false;  // false: linear-interpolation fallback
};

struct Enhancements {
  double baseline = 1.0;
  double depth = 1.0;
  double contrast = 1.0;
  /// eta_B(reference) / eta_B(curve).
  double sensitivity = 1.0;
};

struct FiguresOfMerit {
  double baseline = 0.0;
  double min_pl = 0.0;
  double depth = 0.0;
  double contrast = 0.0;
  double fwhm = 0.0;         // of the deeper dip, Hz
  double sensitivity = 0.0;  // T / sqrt(Hz)
  std::vector<Dip> dips;     // ordered by frequency
  std::optional<Enhancements> enhancement;
};

double odmr_baseline(const OdmrCurve& curve, double margin = 0.10);

/// Dips with Lorentzian-fitted centre and width. NoResonanceError if none.
std::vector<Dip> find_dips(const OdmrCurve& curve, double baseline, const FomOptions& options = {});

FiguresOfMerit odmr_figures_of_merit(const OdmrCurve& curve,
                                     const OdmrCurve* reference = nullptr,
                                     const FomOptions& options = {});

/// eta_B = 4 h dnu / (3 sqrt(3) g mu_B C sqrt(PL)). UndefinedSensitivityError
/// unless C > 0 and PL > 0.
double dc_sensitivity(double fwhm, double contrast, double pl_rate);

}  // namespace nvps

#endif  // NVPS_FIGURES_OF_MERIT_HPP
