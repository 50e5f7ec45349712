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

#include "nvps/sweep.hpp"

#include "nvps/errors.hpp"
#include "nvps/odmr.hpp"
#include "nvps/parallel.hpp"

namespace nvps {

std::vector<SweepRow> intensity_sweep(const NVSetup& setup, std::span<const double> intensity,
                                      std::span<const double> frequency_grid, int threads,
                                      const FomOptions& options) {
  for (double i : intensity) {
    if (!(i > 0.0)) throw UsageError("sweep intensities must be > 0");
  }
  std::vector<SweepRow> rows(intensity.size());
  parallel_for(intensity.size(), threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.intensity = intensity[i];
    try {
      NVSetup s = setup;
      s.nv.drive.intensity = intensity[i];
      const OdmrCurve curve = odmr_sweep(NVModel(s), frequency_grid);
      if (s.plasmonics) {
        const OdmrCurve ref = odmr_sweep(NVModel(reference_setup(s)), frequency_grid);
        row.reference = odmr_figures_of_merit(ref, nullptr, options);
        row.fom = odmr_figures_of_merit(curve, &ref, options);
      } else {
        row.fom = odmr_figures_of_merit(curve, nullptr, options);
      }
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  return rows;
}

}  // namespace nvps
