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

#include "nvps/runner.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "nvps/csv.hpp"
#include "nvps/emission.hpp"
#include "nvps/errors.hpp"
#include "nvps/figures_of_merit.hpp"
#include "nvps/manifest.hpp"
#include "nvps/odmr.hpp"
#include "nvps/readout.hpp"
#include "nvps/sweep.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string version_line() { return std::string("nvps ") + NVPS_VERSION; }

class Writer {
 public:
  explicit Writer(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

  void csv(const std::string& name, CsvTable table) {
    table.comments.push_back(version_line());
    write_file_atomic(dir_ / name, format_csv(table));
    files_.push_back(name);
  }

  void summary(const std::string& name, std::vector<std::string> comments,
               const std::vector<std::pair<std::string, double>>& values) {
    comments.push_back(version_line());
    write_file_atomic(dir_ / name, format_summary(comments, values));
    files_.push_back(name);
  }

  void text(const std::string& name, const std::string& content) {
    write_file_atomic(dir_ / name, content);
    files_.push_back(name);
  }

  const fs::path& dir() const { return dir_; }
  const std::vector<std::string>& files() const { return files_; }

 private:
  fs::path dir_;
  std::vector<std::string> files_;
};

CsvTable odmr_table(const OdmrCurve& c, const std::string& title) {
  CsvTable t{{title, "freq_GHz: microwave frequency (GHz)", "PL: steady-state photoluminescence (photons/s)"},
             {"freq_GHz", "PL"},
             {}};
  for (std::size_t i = 0; i < c.frequency.size(); ++i) t.rows.push_back({c.frequency[i] * 1e-9, c.pl[i]});
  return t;
}

void add_fom(std::vector<std::pair<std::string, double>>& out, const FiguresOfMerit& f, const std::string& prefix) {
  out.emplace_back(prefix + "baseline", f.baseline);
  out.emplace_back(prefix + "depth", f.depth);
  out.emplace_back(prefix + "contrast", f.contrast);
  out.emplace_back(prefix + "fwhm_MHz", f.fwhm * 1e-6);
  out.emplace_back(prefix + "sensitivity_uT_per_sqrtHz", f.sensitivity * 1e6);
  for (std::size_t i = 0; i < f.dips.size(); ++i) {
    out.emplace_back(prefix + "dip" + std::to_string(i) + "_center_GHz", f.dips[i].center * 1e-9);
    out.emplace_back(prefix + "dip" + std::to_string(i) + "_fwhm_MHz", f.dips[i].fwhm * 1e-6);
  }
  if (f.enhancement) {
    out.emplace_back(prefix + "baseline_enhancement", f.enhancement->baseline);
    out.emplace_back(prefix + "depth_enhancement", f.enhancement->depth);
    out.emplace_back(prefix + "contrast_enhancement", f.enhancement->contrast);
    out.emplace_back(prefix + "sensitivity_enhancement", f.enhancement->sensitivity);
  }
}

const std::vector<std::string> kFomComments = {
    "ODMR figures of merit. Baseline: mean PL over the outer grid margins; depth: baseline - min PL;",
    "contrast: depth / baseline; FWHM from a Lorentzian fit to each dip; enhancements: ratio to the reference",
    "(sensitivity enhancement = reference eta_B / eta_B)."};

void run_odmr(const RunConfig& c, const RunOptions& o, Writer& w, RunResult& r) {
  const NVSetup setup = c.setup();
  const auto grid = linear_grid(c.odmr.start, c.odmr.stop, c.odmr.points);
  const OdmrCurve curve = odmr_sweep(NVModel(setup), grid, o.threads);
  w.csv("odmr.csv", odmr_table(curve, "ODMR sweep"));
  std::optional<OdmrCurve> ref;
  if (setup.plasmonics && c.reference) {
    ref = odmr_sweep(NVModel(reference_setup(setup)), grid, o.threads);
    w.csv("odmr_reference.csv", odmr_table(*ref, "ODMR sweep of the particle-free reference"));
  }
  try {
    const FiguresOfMerit f = odmr_figures_of_merit(curve, ref ? &*ref : nullptr, c.fom.options);
    add_fom(r.summary, f, "");
    w.summary("fom.csv", kFomComments, r.summary);
  } catch (const NoResonanceError& e) {
    r.notes.push_back(std::string("no figures of merit: ") + e.what());
  } catch (const UndefinedSensitivityError& e) {
    r.notes.push_back(std::string("no figures of merit: ") + e.what());
  }
}

CsvTable trace_table(const TimeTrace& t, const std::string& title) {
  CsvTable table{{title, "time_us: time after initialisation (us)", "PL: photoluminescence (photons/s)"},
                 {"time_us", "PL"},
                 {}};
  for (std::size_t i = 0; i < t.time.size(); ++i) table.rows.push_back({t.time[i] * 1e6, t.pl[i]});
  return table;
}

void write_readout(const ReadoutResult& res, const std::string& stem, const std::string& what, Writer& w) {
  w.csv(stem + "_0.csv", trace_table(res.zero, what + ", initialised in g_0 |0>"));
  w.csv(stem + "_pm1.csv", trace_table(res.pm1, what + ", initialised in the g_0 |+1>/|-1> mixture"));
  CsvTable d{{what + ", spin contrast PL_0(t) - PL_pm1(t)", "time_us: time (us)",
              "delta_PL: PL difference (photons/s)"},
             {"time_us", "delta_PL"},
             {}};
  for (std::size_t i = 0; i < res.difference.size(); ++i) d.rows.push_back({res.zero.time[i] * 1e6, res.difference[i]});
  w.csv(stem + "_difference.csv", d);
}

void run_trace(const RunConfig& c, const RunOptions&, Writer& w, RunResult& r) {
  const NVSetup setup = c.setup();
  const ReadoutResult res = time_domain_readout(NVModel(setup), c.trace);
  write_readout(res, "trace", "Time-domain PL", w);
  r.summary = {{"steady_pl", res.steady_pl},
               {"contrast_area", res.contrast_area},
               {"stabilization_time_us", res.stabilization_time * 1e6}};
  if (setup.plasmonics && c.reference) {
    const ReadoutResult ref = time_domain_readout(NVModel(reference_setup(setup)), c.trace);
    write_readout(ref, "trace_reference", "Time-domain PL of the particle-free reference", w);
    const ReadoutComparison cmp = compare_readout(res, ref);
    r.summary.emplace_back("reference_steady_pl", ref.steady_pl);
    r.summary.emplace_back("reference_contrast_area", ref.contrast_area);
    r.summary.emplace_back("reference_stabilization_time_us", ref.stabilization_time * 1e6);
    r.summary.emplace_back("steady_enhancement", cmp.steady_enhancement);
    r.summary.emplace_back("area_enhancement", cmp.area_enhancement);
    r.summary.emplace_back("stabilization_speedup", cmp.stabilization_speedup);
  }
  w.summary("trace_summary.csv",
            {"Time-domain readout. contrast_area: integral of PL_0 - PL_pm1 over the window (photons);",
             "stabilization_time: last entry of either trace into the steady-PL band"},
            r.summary);
}

CsvTable spectrum_table(const SpectrumResult& s, const std::string& title) {
  CsvTable t{{title, "energy_eV: photon energy (eV)",
              "total and band_k: spectral density per unit angular frequency (photons/s per rad/s)"},
             {"energy_eV", "total"},
             {}};
  for (std::size_t k = 0; k < s.bands.size(); ++k) t.columns.push_back("band_" + std::to_string(k));
  for (std::size_t i = 0; i < s.energy_ev.size(); ++i) {
    std::vector<double> row{s.energy_ev[i], s.total[i]};
    for (const auto& b : s.bands) row.push_back(b[i]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

void run_spectrum(const RunConfig& c, const RunOptions& o, Writer& w, RunResult& r) {
  const NVSetup setup = c.setup();
  const NVModel model(setup);
  const auto grid = linear_grid(units::joule_to_ev(c.spectrum.start), units::joule_to_ev(c.spectrum.stop),
                                c.spectrum.points);
  const char* zone = c.spectrum.zone == FieldZone::kFar ? "far field" : "near field";
  w.csv("spectrum.csv", spectrum_table(model_emission_spectrum(model, grid, c.spectrum.zone, c.spectrum.scale),
                                       std::string("Emission spectrum, ") + zone));
  if (setup.plasmonics && c.reference) {
    const NVModel ref(reference_setup(setup));
    w.csv("spectrum_reference.csv",
          spectrum_table(model_emission_spectrum(ref, grid, c.spectrum.zone),
                         std::string("Emission spectrum of the particle-free reference, ") + zone));
    ZplOptions z;
    z.half_window_ev = units::joule_to_ev(c.spectrum.zpl_half_window);
    z.points = c.spectrum.zpl_points;
    z.far_field_scale = c.spectrum.far_field_scale;
    r.summary.emplace_back("zpl_enhancement", zpl_enhancement(model, ref, z));
  }
  if (c.spectrum.theta_points > 0) {
    if (!setup.plasmonics || !setup.plasmonics->angle) {
      throw ConfigError("spectrum.theta_points needs plasmonics.orientation: angle");
    }
    const auto theta = c.spectrum.theta_points == 1 ? std::vector<double>{0.0}
                                                    : linear_grid(0.0, units::kPi / 2, c.spectrum.theta_points);
    const auto pl = theta_scan(setup, theta, o.threads);
    CsvTable t{{"Steady-state PL versus drive polarisation angle", "theta_rad: angle from the NV axis (rad)",
                "PL: photoluminescence (photons/s)"},
               {"theta_rad", "PL"},
               {}};
    for (std::size_t i = 0; i < theta.size(); ++i) t.rows.push_back({theta[i], pl[i]});
    w.csv("theta_scan.csv", t);
  }
  if (!r.summary.empty()) {
    w.summary("spectrum_summary.csv",
              {"zpl_enhancement: far-field-scaled ZPL-window emission over the reference"}, r.summary);
  }
}

void run_sweep(const RunConfig& c, const RunOptions& o, Writer& w, RunResult& r) {
  const NVSetup setup = c.setup();
  const auto grid = linear_grid(c.odmr.start, c.odmr.stop, c.odmr.points);
  const auto rows = intensity_sweep(setup, c.sweep.intensities, grid, o.threads, c.fom.options);
  CsvTable t{{"ODMR figures of merit versus optical intensity; ok = 0 marks a failed point",
              "intensity_mW_um2: drive intensity (mW/um^2); fwhm_MHz: deeper-dip width;",
              "sensitivity_uT: eta_B (uT/sqrt(Hz)); *_enhancement: ratio to the particle-free reference"},
             {"intensity_mW_um2", "ok", "baseline", "depth", "contrast", "fwhm_MHz", "sensitivity_uT",
              "baseline_enhancement", "depth_enhancement", "contrast_enhancement", "sensitivity_enhancement"},
             {}};
  int failed = 0;
  for (const SweepRow& row : rows) {
    std::vector<double> v(t.columns.size(), kNaN);
    v[0] = units::si_to_mw_per_um2(row.intensity);
    v[1] = row.ok() ? 1.0 : 0.0;
    if (row.ok()) {
      const FiguresOfMerit& f = *row.fom;
      v[2] = f.baseline;
      v[3] = f.depth;
      v[4] = f.contrast;
      v[5] = f.fwhm * 1e-6;
      v[6] = f.sensitivity * 1e6;
      if (f.enhancement) {
        v[7] = f.enhancement->baseline;
        v[8] = f.enhancement->depth;
        v[9] = f.enhancement->contrast;
        v[10] = f.enhancement->sensitivity;
      }
    } else {
      ++failed;
      t.comments.push_back("failed at " + format_double(v[0]) + " mW/um^2: " + row.error);
      r.notes.push_back("sweep point " + format_double(v[0]) + " mW/um^2 failed: " + row.error);
    }
    t.rows.push_back(std::move(v));
  }
  w.csv("sweep.csv", t);
  r.summary = {{"points", static_cast<double>(rows.size())}, {"failed", static_cast<double>(failed)}};
}

void run_fom(const RunConfig& c, const RunOptions&, Writer& w, RunResult& r) {
  if (c.fom.curve.empty()) throw ConfigError("fom needs a curve CSV (fom.curve or --curve)");
  auto resolve = [&](const fs::path& p) { return p.is_absolute() || c.base_dir.empty() ? p : c.base_dir / p; };
  const OdmrCurve curve = read_odmr_csv(resolve(c.fom.curve));
  std::optional<OdmrCurve> ref;
  if (!c.fom.reference.empty()) ref = read_odmr_csv(resolve(c.fom.reference));
  add_fom(r.summary, odmr_figures_of_merit(curve, ref ? &*ref : nullptr, c.fom.options), "");
  w.summary("fom.csv", kFomComments, r.summary);
}

std::string plot_script(Command command, const std::vector<std::string>& files) {
  std::ostringstream s;
  s << "# Plots the CSV outputs of `nvps " << command_name(command) << "`. Requires numpy and matplotlib.\n"
    << "import csv, pathlib\nimport matplotlib.pyplot as plt\n\n"
    << "here = pathlib.Path(__file__).parent\n\n"
    << "def load(name):\n"
    << "    rows = [r for r in csv.reader(open(here / name)) if r and not r[0].startswith('#')]\n"
    << "    return rows[0], [[float(x) for x in r] for r in rows[1:]]\n\n";
  for (const auto& f : files) {
    if (f.find("summary") != std::string::npos || f == "fom.csv") continue;
    s << "cols, rows = load('" << f << "')\n"
      << "plt.figure()\n"
      << "for j in range(1, len(cols)):\n"
      << "    if cols[j] != 'ok':\n"
      << "        plt.plot([r[0] for r in rows], [r[j] for r in rows], label=cols[j])\n"
      << "plt.xlabel(cols[0]); plt.title('" << f << "'); plt.legend()\n\n";
  }
  s << "plt.show()\n";
  return s.str();
}

}  // namespace

RunResult run_experiment(Command command, const RunConfig& config, const RunOptions& options) {
  if (config.experiment && *config.experiment != command) {
    throw ConfigError(std::string("config is for '") + command_name(*config.experiment) + "', not '" +
                      command_name(command) + "'");
  }
  RunResult r;
  r.out_dir = options.out_dir.empty() ? config.output_dir : options.out_dir;
  Writer w(r.out_dir);
  switch (command) {
    case Command::kOdmr: run_odmr(config, options, w, r); break;
    case Command::kTrace: run_trace(config, options, w, r); break;
    case Command::kSpectrum: run_spectrum(config, options, w, r); break;
    case Command::kSweep: run_sweep(config, options, w, r); break;
    case Command::kFom: run_fom(config, options, w, r); break;
  }
  if (options.plot_script) w.text("plot_" + std::string(command_name(command)) + ".py", plot_script(command, w.files()));
  r.outputs = w.files();
  write_file_atomic(r.out_dir / "manifest.json", build_manifest(command, config, r.out_dir, r.outputs));
  return r;
}

}  // namespace nvps
