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

#include "nvps/odmr.hpp"

#include <sstream>

#include "nvps/errors.hpp"
#include "nvps/parallel.hpp"
#include "nvps/units.hpp"

namespace nvps {

void OdmrCurve::validate() const {
  if (frequency.size() != pl.size()) throw UsageError("ODMR curve columns differ in length");
  if (frequency.size() < 3) throw UsageError("ODMR curve needs at least three points");
  for (std::size_t i = 0; i < frequency.size(); ++i) {
    if (i > 0 && !(frequency[i] > frequency[i - 1])) {
      throw UsageError("ODMR frequency grid must be strictly increasing");
    }
    if (!(pl[i] > 0.0)) throw UsageError("ODMR PL must be > 0 everywhere");
  }
}

std::vector<double> linear_grid(double first, double last, int points) {
  if (points < 2) throw UsageError("a grid needs at least two points");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    g[static_cast<std::size_t>(i)] = first + (last - first) * static_cast<double>(i) / (points - 1);
  }
  return g;
}

std::vector<double> default_odmr_grid() { return linear_grid(2.60e9, 3.14e9, 271); }

OdmrCurve odmr_sweep(const NVModel& model, std::span<const double> frequency_grid, int threads) {
  OdmrCurve curve;
  curve.frequency.assign(frequency_grid.begin(), frequency_grid.end());
  curve.pl.assign(frequency_grid.size(), 0.0);
  parallel_for(frequency_grid.size(), threads, [&](std::size_t i) {
    try {
      curve.pl[i] = model.pl(model.steady_state(units::hz_to_angular(frequency_grid[i])));
    } catch (const SolverError& e) {
      std::ostringstream msg;
      msg << "ODMR point " << i << " (" << frequency_grid[i] * 1e-9 << " GHz): " << e.what();
      throw SolverError(msg.str());
    }
  });
  return curve;
}

}  // namespace nvps
