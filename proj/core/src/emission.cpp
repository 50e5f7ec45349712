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

#include "nvps/emission.hpp"

#include "nvps/errors.hpp"
#include "nvps/odmr.hpp"
#include "nvps/parallel.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace {

double integrate(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (y[i] + y[i - 1]);
  return s;
}

double zpl_window_emission(const NVModel& model, const ZplOptions& o) {
  const double zpl = units::joule_to_ev(model.setup().nv.drive.zpl_energy);
  const auto grid = linear_grid(zpl - o.half_window_ev, zpl + o.half_window_ev, o.points);
  const SpectrumResult s = model_emission_spectrum(model, grid, FieldZone::kNear);
  return integrate(s.energy_ev, s.total);
}

}  // namespace

std::vector<double> default_emission_grid_ev() { return linear_grid(1.5, 2.1, 601); }

SpectrumResult model_emission_spectrum(const NVModel& model, std::span<const double> energy_ev,
                                       FieldZone zone, double scale) {
  std::vector<double> w(energy_ev.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = units::ev_to_angular(energy_ev[i]);
  const EmissionSpectrum s =
      emission_spectrum(model.liouvillian(), model.channels(), model.steady_state(),
                        model.coupling().quantum_efficiency, model.setup().nv.drive.angular_frequency(), w,
                        zone);
  SpectrumResult r{{energy_ev.begin(), energy_ev.end()}, s.total, s.bands};
  for (auto& v : r.total) v *= scale;
  for (auto& band : r.bands) {
    for (auto& v : band) v *= scale;
  }
  return r;
}

double zpl_enhancement(const NVModel& model, const NVModel& reference, const ZplOptions& options) {
  if (options.points < 3 || !(options.half_window_ev > 0.0)) throw UsageError("bad ZPL window");
  return options.far_field_scale * zpl_window_emission(model, options) /
         zpl_window_emission(reference, options);
}

std::vector<double> theta_scan(const NVSetup& setup, std::span<const double> theta, int threads) {
  if (!setup.plasmonics || !setup.plasmonics->angle) {
    throw UsageError("theta scan needs a particle with an angle mode");
  }
  std::vector<double> pl(theta.size());
  parallel_for(theta.size(), threads, [&](std::size_t i) {
    NVSetup s = setup;
    s.plasmonics->angle->theta = theta[i];
    const NVModel model(std::move(s));
    pl[i] = model.pl(model.steady_state());
  });
  return pl;
}

}  // namespace nvps
