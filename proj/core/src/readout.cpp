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

#include "nvps/readout.hpp"

#include <cmath>
#include <sstream>

#include "nvps/errors.hpp"
#include "nvps/odmr.hpp"

namespace nvps {

namespace {

TimeTrace run_trace(const NVModel& model, const Liouvillian& l, const DensityOperator& rho0,
                    std::string label, const std::vector<double>& grid, const EvolveOptions& options) {
  TimeTrace trace{std::move(label), grid, {}};
  trace.pl.reserve(grid.size());
  evolve(rho0, l, grid, [&](double, const DensityOperator& rho) { trace.pl.push_back(model.pl(rho)); },
         options);
  return trace;
}

}  // namespace

double stabilization_time(const TimeTrace& trace, double steady, double threshold) {
  if (trace.pl.empty() || trace.pl.size() != trace.time.size()) throw UsageError("malformed time trace");
  if (!(steady > 0.0)) throw UsageError("steady PL must be > 0");
  std::size_t i = trace.pl.size();
  while (i > 0 && std::abs(trace.pl[i - 1] - steady) < threshold * steady) --i;
  if (i == trace.pl.size()) {
    std::ostringstream msg;
    msg << "trace '" << trace.label << "' has not settled within " << threshold * 100
        << "% of the steady PL by t = " << trace.time.back() << " s";
    throw WindowError(msg.str());
  }
  return trace.time[i];
}

ReadoutResult time_domain_readout(const NVModel& model, const ReadoutOptions& options) {
  if (!(options.window > 0.0)) throw UsageError("readout window must be > 0");
  const std::vector<double> grid = linear_grid(0.0, options.window, options.samples);
  const Liouvillian l = model.liouvillian();

  ReadoutResult r;
  r.steady_pl = model.pl(model.steady_state());
  r.zero = run_trace(model, l, model.spin_zero_state(), "0", grid, options.evolve);
  r.pm1 = run_trace(model, l, model.spin_pm1_state(), "pm1", grid, options.evolve);

  r.difference.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) r.difference[i] = r.zero.pl[i] - r.pm1.pl[i];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    r.contrast_area += 0.5 * (grid[i] - grid[i - 1]) * (r.difference[i] + r.difference[i - 1]);
  }
  r.stabilization_time =
      std::max(stabilization_time(r.zero, r.steady_pl, options.stabilization_threshold),
               stabilization_time(r.pm1, r.steady_pl, options.stabilization_threshold));
  return r;
}

ReadoutComparison compare_readout(const ReadoutResult& result, const ReadoutResult& reference) {
  return {result.steady_pl / reference.steady_pl, result.contrast_area / reference.contrast_area,
          reference.stabilization_time / result.stabilization_time};
}

}  // namespace nvps
