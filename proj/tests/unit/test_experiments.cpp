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

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "nvps/emission.hpp"
#include "nvps/errors.hpp"
#include "nvps/figures_of_merit.hpp"
#include "nvps/odmr.hpp"
#include "nvps/parallel.hpp"
#include "nvps/readout.hpp"
#include "nvps/sweep.hpp"
#include "nvps/units.hpp"

using namespace nvps;

namespace {

constexpr double kH = 6.62607015e-34;
constexpr double kMuB = 9.2740100783e-24;

struct LorentzDip {
  double center, fwhm, depth;
};

OdmrCurve synthetic(double baseline, std::vector<LorentzDip> dips, int points = 541) {
  OdmrCurve c;
  c.frequency = linear_grid(2.60e9, 3.14e9, points);
  for (double f : c.frequency) {
    double v = baseline;
    for (const auto& d : dips) {
      const double u = (f - d.center) / (0.5 * d.fwhm);
      v -= d.depth / (1.0 + u * u);
    }
    c.pl.push_back(v);
  }
  return c;
}

NVSetup reduced_setup(int n) {
  NVSetup s;
  const auto full = VibronicTable::defaults();
  s.nv.vibronic = VibronicTable({full.rows().begin(), full.rows().begin() + n + 1});
  return s;
}

}  // namespace

TEST_CASE("figures of merit of a synthetic two-dip curve") {
  const OdmrCurve c = synthetic(1e5, {{2.75e9, 20e6, 2e4}, {2.99e9, 30e6, 1.5e4}});
  const FiguresOfMerit f = odmr_figures_of_merit(c);
  REQUIRE(f.dips.size() == 2);
  // Each dip sits on the other's tail, which pulls the centres slightly.
  CHECK(f.dips[0].center == doctest::Approx(2.75e9).epsilon(1e-5));
  CHECK(f.dips[1].center == doctest::Approx(2.99e9).epsilon(1e-5));
  CHECK(f.dips[0].fwhm == doctest::Approx(20e6).epsilon(1e-3));
  CHECK(f.dips[1].fwhm == doctest::Approx(30e6).epsilon(1e-3));
  CHECK(f.dips[0].fitted);
  CHECK(f.fwhm == doctest::Approx(20e6).epsilon(1e-3));
  CHECK(f.contrast > 0.0);
  CHECK(f.contrast <= 1.0);
  CHECK(f.depth <= f.baseline);
  CHECK(!f.enhancement);

  const FiguresOfMerit single = odmr_figures_of_merit(synthetic(1e5, {{2.8312e9, 17e6, 3e4}}));
  REQUIRE(single.dips.size() == 1);
  CHECK(single.dips[0].center == doctest::Approx(2.8312e9).epsilon(1e-8));
  CHECK(single.dips[0].fwhm == doctest::Approx(17e6).epsilon(1e-4));
}

TEST_CASE("identical curves give unit enhancements") {
  const OdmrCurve c = synthetic(1e5, {{2.87e9, 25e6, 3e4}});
  const FiguresOfMerit f = odmr_figures_of_merit(c, &c);
  REQUIRE(f.enhancement);
  CHECK(f.enhancement->baseline == 1.0);
  CHECK(f.enhancement->depth == 1.0);
  CHECK(f.enhancement->contrast == 1.0);
  CHECK(f.enhancement->sensitivity == 1.0);
}

TEST_CASE("figures of merit under PL rescaling") {
  const OdmrCurve c = synthetic(1e5, {{2.80e9, 25e6, 3e4}, {2.95e9, 25e6, 2e4}});
  OdmrCurve scaled = c;
  for (double& v : scaled.pl) v *= 1e3;
  const FiguresOfMerit a = odmr_figures_of_merit(c);
  const FiguresOfMerit b = odmr_figures_of_merit(scaled);
  CHECK(b.contrast == doctest::Approx(a.contrast).epsilon(1e-12));
  CHECK(b.fwhm == doctest::Approx(a.fwhm).epsilon(1e-6));
  for (std::size_t i = 0; i < a.dips.size(); ++i) {
    CHECK(b.dips[i].center == doctest::Approx(a.dips[i].center).epsilon(1e-9));
  }
  CHECK(b.sensitivity == doctest::Approx(a.sensitivity / std::sqrt(1e3)).epsilon(1e-6));

  // Enhancements are ratios and do not see a common unit change.
  const OdmrCurve ref = synthetic(1e4, {{2.80e9, 30e6, 2e3}});
  OdmrCurve ref_scaled = ref;
  for (double& v : ref_scaled.pl) v *= 1e3;
  const auto e1 = *odmr_figures_of_merit(c, &ref).enhancement;
  const auto e2 = *odmr_figures_of_merit(scaled, &ref_scaled).enhancement;
  CHECK(e2.baseline == doctest::Approx(e1.baseline).epsilon(1e-12));
  CHECK(e2.depth == doctest::Approx(e1.depth).epsilon(1e-12));
  CHECK(e2.sensitivity == doctest::Approx(e1.sensitivity).epsilon(1e-6));
}

TEST_CASE("flat curves have no resonance") {
  OdmrCurve c;
  c.frequency = linear_grid(2.6e9, 3.1e9, 51);
  c.pl.assign(51, 4e4);
  CHECK_THROWS_AS(odmr_figures_of_merit(c), NoResonanceError);
  c.pl[3] = -1.0;
  CHECK_THROWS_AS(odmr_figures_of_merit(c), UsageError);
}

TEST_CASE("dc sensitivity") {
  const double fwhm = 10e6, contrast = 0.2, pl = 1e5;
  const double eta = dc_sensitivity(fwhm, contrast, pl);
  CHECK(eta == doctest::Approx(4.0 * kH * fwhm / (3.0 * std::sqrt(3.0) * 2.0 * kMuB * contrast * std::sqrt(pl)))
                   .epsilon(1e-12));
  CHECK(dc_sensitivity(fwhm, contrast, 2.0 * pl) == doctest::Approx(eta / std::sqrt(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(dc_sensitivity(fwhm, 0.0, pl), UndefinedSensitivityError);
  CHECK_THROWS_AS(dc_sensitivity(fwhm, contrast, 0.0), UndefinedSensitivityError);
}

TEST_CASE("stabilization time") {
  TimeTrace t{"x", {0.0, 1.0, 2.0, 3.0, 4.0}, {5.0, 2.0, 1.2, 1.005, 0.999}};
  CHECK(stabilization_time(t, 1.0, 0.01) == 3.0);
  CHECK(stabilization_time(t, 1.0, 0.5) == 2.0);
  CHECK(stabilization_time(t, 1.0, 10.0) == 0.0);
  t.pl.back() = 1.5;
  CHECK_THROWS_AS(stabilization_time(t, 1.0, 0.01), WindowError);
}

TEST_CASE("parallel_for covers every index once") {
  for (int threads : {1, 3, 8}) {
    std::vector<std::atomic<int>> hits(97);
    parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  auto failing = [](std::size_t i) {
    if (i == 5 || i == 9) throw std::runtime_error(std::to_string(i));
  };
  for (int threads : {1, 4}) {
    try {
      parallel_for(20, threads, failing);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "5");
    }
  }
}

TEST_CASE("zero-field ODMR of the isolated NV") {
  const NVModel model{NVSetup{}};
  const auto grid = linear_grid(2.70e9, 3.04e9, 69);
  const OdmrCurve c = odmr_sweep(model, grid);
  const FiguresOfMerit f = odmr_figures_of_merit(c);
  REQUIRE(f.dips.size() == 1);
  CHECK(std::abs(f.dips[0].center - 2.87e9) < 0.1 * f.dips[0].fwhm);
  // Fitted microwave amplitude reproduces a dip of roughly a quarter.
  CHECK(f.contrast > 0.15);
  CHECK(f.contrast < 0.35);

  NVSetup dark;
  dark.nv.spin.microwave_amplitude = 0.0;
  const NVModel no_mw(dark);
  const double pl_off = no_mw.pl(no_mw.steady_state());
  // Far from any spin resonance the microwave drive is invisible.
  CHECK(model.pl(model.steady_state(units::hz_to_angular(4.5e9))) == doctest::Approx(pl_off).epsilon(1e-3));
  CHECK(c.pl.front() < pl_off);
}

TEST_CASE("contrast grows with the microwave amplitude") {
  NVSetup dark;
  dark.nv.spin.microwave_amplitude = 0.0;
  const NVModel no_mw(dark);
  const double off = no_mw.pl(no_mw.steady_state());
  double last = 0.0;
  for (double b : {0.002e-3, 0.005e-3, 0.02e-3, 0.1e-3, 0.35e-3}) {
    NVSetup s;
    s.nv.spin.microwave_amplitude = b;
    const NVModel m(s);
    const double contrast = 1.0 - m.pl(m.steady_state(units::hz_to_angular(2.87e9))) / off;
    CHECK(contrast > last);
    last = contrast;
  }
}

TEST_CASE("sweep flags rows without a resonance") {
  NVSetup s = reduced_setup(2);
  s.nv.spin.microwave_amplitude = 0.0;
  const std::vector<double> intensity{units::mw_per_um2_to_si(0.1), units::mw_per_um2_to_si(1.0)};
  const auto grid = linear_grid(2.80e9, 2.94e9, 15);
  const auto rows = intensity_sweep(s, intensity, grid);
  REQUIRE(rows.size() == 2);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].intensity == intensity[i]);
    CHECK(!rows[i].ok());
    CHECK(!rows[i].fom);
  }

  s.nv.spin.microwave_amplitude = 0.35e-3;
  const auto good = intensity_sweep(s, intensity, grid, 2);
  for (const auto& r : good) {
    CHECK(r.ok());
    REQUIRE(r.fom);
    CHECK(!r.reference);
  }
}

TEST_CASE("time-domain readout on a reduced model") {
  NVSetup s = reduced_setup(2);
  s.nv.spin.microwave_amplitude = 0.0;
  s.nv.drive.intensity = units::mw_per_um2_to_si(5.0);
  const NVModel model(s);
  ReadoutOptions o;
  o.window = 10e-6;
  o.samples = 401;
  const ReadoutResult r = time_domain_readout(model, o);
  REQUIRE(r.zero.pl.size() == 401);
  CHECK(r.zero.pl.front() == 0.0);
  CHECK(std::abs(r.zero.pl.back() - r.steady_pl) <= 1e-6 * r.steady_pl);
  CHECK(std::abs(r.pm1.pl.back() - r.steady_pl) <= 1e-6 * r.steady_pl);
  CHECK(r.contrast_area > 0.0);
  CHECK(r.stabilization_time > 0.0);
  CHECK(r.stabilization_time < o.window);
  for (std::size_t i = 0; i < r.difference.size(); ++i) {
    CHECK(r.difference[i] == doctest::Approx(r.zero.pl[i] - r.pm1.pl[i]));
  }
  const auto same = compare_readout(r, r);
  CHECK(same.steady_enhancement == 1.0);
  CHECK(same.area_enhancement == 1.0);
  CHECK(same.stabilization_speedup == 1.0);
}

TEST_CASE("emission spectrum bookkeeping") {
  NVSetup s = reduced_setup(2);
  const NVModel model(s);
  const auto grid = linear_grid(1.60, 2.00, 81);
  const SpectrumResult a = model_emission_spectrum(model, grid);
  const SpectrumResult b = model_emission_spectrum(model, grid, FieldZone::kFar, 0.5);
  REQUIRE(a.bands.size() == 3);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double sum = 0.0;
    for (const auto& band : a.bands) sum += band[i];
    CHECK(a.total[i] == doctest::Approx(sum).epsilon(1e-12));
    CHECK(a.total[i] >= 0.0);
    CHECK(b.total[i] == doctest::Approx(0.5 * a.total[i]).epsilon(1e-12));
  }
  ZplOptions z;
  z.points = 41;
  CHECK(zpl_enhancement(model, model, z) == doctest::Approx(z.far_field_scale).epsilon(1e-12));
}

TEST_CASE("theta scan needs an angle mode") {
  const std::vector<double> theta{0.0};
  CHECK_THROWS_AS(theta_scan(NVSetup{}, theta), UsageError);
}
