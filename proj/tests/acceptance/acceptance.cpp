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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Usage: nvps_acceptance [--threads N] [C1 C2 ...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nvps/config.hpp"
#include "nvps/emission.hpp"
#include "nvps/errors.hpp"
#include "nvps/evolve.hpp"
#include "nvps/figures_of_merit.hpp"
#include "nvps/nv_model.hpp"
#include "nvps/odmr.hpp"
#include "nvps/readout.hpp"
#include "nvps/spectrum.hpp"
#include "nvps/steady_state.hpp"
#include "nvps/units.hpp"

namespace fs = std::filesystem;
using namespace nvps;

namespace {

const fs::path kConfigs = NVPS_TEST_CONFIG_DIR;

// Independent constants for the Zeeman oracle.
constexpr double kPlanck = 6.62607015e-34;
constexpr double kBohr = 9.2740100783e-24;

int g_threads = 1;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> run;
};

NVSetup setup_of(const std::string& file) { return parse_config(kConfigs / file).setup(); }

OdmrCurve odmr_of(const NVSetup& s, const RunConfig& c) {
  const auto grid = linear_grid(c.odmr.start, c.odmr.stop, c.odmr.points);
  return odmr_sweep(NVModel(s), grid, g_threads);
}

// ---------------------------------------------------------------------------

void zeeman_dips(Outcome& o) {
  const RunConfig c = parse_config(kConfigs / "zeeman_odmr.yaml");
  const OdmrCurve curve = odmr_of(c.setup(), c);
  const FiguresOfMerit f = odmr_figures_of_merit(curve);
  const double split = 2.0 * kBohr * c.nv.spin.axial_field / kPlanck;
  const double predicted[2] = {2.87e9 - split, 2.87e9 + split};
  o.detail << "split " << split * 1e-6 << " MHz;";
  o.require(f.dips.size() == 2, "two dips");
  if (f.dips.size() != 2) return;
  for (int i = 0; i < 2; ++i) {
    const Dip& d = f.dips[static_cast<std::size_t>(i)];
    const double off = std::abs(d.center - predicted[i]);
    o.detail << " dip " << d.center * 1e-9 << " GHz (|d| " << off * 1e-6 << " MHz, FWHM/10 "
             << d.fwhm * 1e-7 << " MHz)";
    o.require(off <= d.fwhm / 10.0, "dip within FWHM/10");
  }
}

void isolated_traces(Outcome& o) {
  const RunConfig c = parse_config(kConfigs / "isolated_trace.yaml");
  const NVModel model(c.setup());
  const ReadoutResult r = time_domain_readout(model, c.trace);
  const double ss = r.steady_pl;
  const auto& p0 = r.zero.pl;
  const auto& p1 = r.pm1.pl;

  const auto peak0 = static_cast<std::size_t>(std::max_element(p0.begin(), p0.end()) - p0.begin());
  bool monotone = true;
  for (std::size_t i = peak0 + 1; i < p0.size(); ++i) monotone = monotone && p0[i] <= p0[i - 1] + 1e-9 * ss;
  o.require(p0[peak0] > ss && monotone, "|0> decays monotonically to steady state");

  const auto peak1 = static_cast<std::size_t>(std::max_element(p1.begin(), p1.begin() + p1.size() / 4) - p1.begin());
  const auto dip1 = static_cast<std::size_t>(std::min_element(p1.begin() + peak1, p1.end()) - p1.begin());
  bool recovers = true;
  for (std::size_t i = dip1 + 1; i < p1.size(); ++i) recovers = recovers && p1[i] >= p1[i - 1] - 1e-9 * ss;
  o.require(dip1 > peak1 && dip1 + 1 < p1.size() && p1[dip1] < ss && recovers,
            "|+-1> dips then recovers");

  const double e0 = std::abs(p0.back() - ss) / ss;
  const double e1 = std::abs(p1.back() - ss) / ss;
  o.detail << "|0> peak/ss " << p0[peak0] / ss << ", |+-1> minimum " << p1[dip1] / ss << " ss at "
           << r.pm1.time[dip1] * 1e6 << " us; final deviation " << e0 << ", " << e1;
  o.require(e0 <= 1e-6 && e1 <= 1e-6, "common steady PL within 1e-6");
}

void reference_sensitivity(Outcome& o) {
  const RunConfig c = parse_config(kConfigs / "reference_odmr.yaml");
  const FiguresOfMerit f = odmr_figures_of_merit(odmr_of(c.setup(), c));
  const double eta = f.sensitivity * 1e6;  // uT/sqrt(Hz)
  o.detail << "eta_B " << eta << " uT/sqrt(Hz) (target 12.2 +-30%), FWHM " << f.fwhm * 1e-6
           << " MHz, C " << f.contrast;
  o.require(std::abs(eta - 12.2) <= 0.3 * 12.2, "eta_B within 30%");
}

void plasmonic_odmr(Outcome& o) {
  const RunConfig par = parse_config(kConfigs / "ag_parallel_odmr.yaml");
  const RunConfig perp = parse_config(kConfigs / "ag_perp_odmr.yaml");
  const NVSetup s_par = par.setup();
  const NVSetup s_perp = perp.setup();
  // Both orientations share the same particle-free reference.
  const OdmrCurve ref = odmr_of(reference_setup(s_perp), perp);
  const auto e_par = *odmr_figures_of_merit(odmr_of(s_par, par), &ref).enhancement;
  const auto e_perp = *odmr_figures_of_merit(odmr_of(s_perp, perp), &ref).enhancement;
  o.detail << "parallel baseline x" << e_par.baseline << "; perpendicular baseline x" << e_perp.baseline
           << ", depth x" << e_perp.depth;
  o.require(e_par.baseline >= 10.0 && e_par.baseline <= 40.0, "parallel baseline in [10, 40]");
  o.require(e_perp.baseline >= 50.0, "perpendicular baseline >= 50");
  o.require(e_perp.depth >= 40.0 && e_perp.depth <= 160.0, "perpendicular depth in [40, 160]");
}

void intensity_trend(Outcome& o) {
  const RunConfig par = parse_config(kConfigs / "ag_parallel_sweep.yaml");
  const RunConfig perp = parse_config(kConfigs / "ag_perp_sweep.yaml");
  const auto& intensities = perp.sweep.intensities;
  std::vector<double> b_par, b_perp;
  for (double intensity : intensities) {
    NVSetup sp = par.setup(), sq = perp.setup();
    sp.nv.drive.intensity = sq.nv.drive.intensity = intensity;
    const double ref = odmr_baseline(odmr_of(reference_setup(sq), perp));
    b_par.push_back(odmr_baseline(odmr_of(sp, par)) / ref);
    b_perp.push_back(odmr_baseline(odmr_of(sq, perp)) / ref);
  }
  auto decreasing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(v[i] < v[i - 1])) return false;
    }
    return true;
  };
  o.detail << "baseline enhancement at";
  for (std::size_t i = 0; i < intensities.size(); ++i) {
    o.detail << " " << units::si_to_mw_per_um2(intensities[i]) * 1e3 << " uW/um^2: x" << b_par[i] << " / x"
             << b_perp[i] << ";";
  }
  o.detail << " (parallel / perpendicular)";
  o.require(decreasing(b_par) && decreasing(b_perp), "strictly decreasing in I");
  o.require(std::abs(intensities.front() - 1e6) < 1.0, "grid starts at 1 uW/um^2");
  o.require(b_par.front() >= 15.0, "parallel >= 15 at 1 uW/um^2");
  o.require(b_perp.front() >= 75.0, "perpendicular >= 75 at 1 uW/um^2");
}

void time_domain(Outcome& o) {
  const RunConfig c = parse_config(kConfigs / "ag_perp_trace.yaml");
  const NVSetup s = c.setup();
  const ReadoutResult near = time_domain_readout(NVModel(s), c.trace);
  const ReadoutResult ref = time_domain_readout(NVModel(reference_setup(s)), c.trace);
  const ReadoutComparison cmp = compare_readout(near, ref);
  o.detail << "steady PL x" << cmp.steady_enhancement << ", contrast area x" << cmp.area_enhancement
           << ", stabilization " << ref.stabilization_time * 1e6 << " us -> " << near.stabilization_time * 1e6
           << " us (x" << cmp.stabilization_speedup << ")";
  o.require(cmp.steady_enhancement >= 16.0 && cmp.steady_enhancement <= 66.0, "steady PL in [16, 66]");
  o.require(cmp.area_enhancement >= 3.2 && cmp.area_enhancement <= 12.8, "contrast area in [3.2, 12.8]");
  o.require(cmp.stabilization_speedup >= 2.0, "stabilization ratio >= 2");
}

void gold_dimer(Outcome& o) {
  const RunConfig c = parse_config(kConfigs / "au_dimer_spectrum.yaml");
  NVSetup s = c.setup();
  s.plasmonics->angle->theta = std::numbers::pi / 2;
  ZplOptions z;
  z.half_window_ev = units::joule_to_ev(c.spectrum.zpl_half_window);
  z.points = c.spectrum.zpl_points;
  z.far_field_scale = c.spectrum.far_field_scale;
  const double enh = zpl_enhancement(NVModel(s), NVModel(reference_setup(s)), z);

  std::vector<double> theta;
  const int n = std::max(c.spectrum.theta_points, 7);
  for (int i = 0; i < n; ++i) theta.push_back(0.5 * std::numbers::pi * i / (n - 1));
  const std::vector<double> pl = theta_scan(s, theta, g_threads);
  bool increasing = true;
  for (std::size_t i = 1; i < pl.size(); ++i) increasing = increasing && pl[i] > pl[i - 1];
  o.detail << "ZPL enhancement x" << enh << " (target 6 +-50%); PL(theta)/PL(pi/2):";
  for (double p : pl) o.detail << " " << p / pl.back();
  o.require(enh >= 3.0 && enh <= 9.0, "ZPL enhancement in [3, 9]");
  o.require(increasing, "PL(theta) increasing with minimum at 0");
}

void property_suite(Outcome& o) {
  int checks = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++checks;
    o.require(ok, what);
  };

  // Structure and Liouvillian/steady-state properties on the full model.
  const NVModel isolated{NVSetup{}};
  check(isolated.scheme().dim() == 32, "dim = 32");
  check(isolated.channels().size() == 62, "62 channels");
  double worst_trace = 0.0, worst_eig = 0.0, worst_res = 0.0;
  const NVSetup particle = setup_of("ag_perp_odmr.yaml");
  for (const NVSetup& s : {NVSetup{}, particle}) {
    const NVModel m(s);
    for (double f : {2.70e9, 2.87e9, 3.00e9}) {
      const Liouvillian l = m.liouvillian(units::hz_to_angular(f));
      const DensityOperator rho = steady_state(l);
      worst_trace = std::max(worst_trace, l.trace_annihilation_error());
      worst_eig = std::min(worst_eig, rho.min_eigenvalue());
      worst_res = std::max(worst_res, steady_state_residual(l, rho));
    }
  }
  check(worst_trace <= 1e-9, "trace annihilation");
  check(worst_eig >= -1e-9, "positivity");
  check(worst_res <= 1e-10, "residual");

  // Steady state against long-time integration, n = 2.
  NVSetup reduced;
  const auto full = VibronicTable::defaults();
  reduced.nv.vibronic = VibronicTable({full.rows().begin(), full.rows().begin() + 3});
  const NVModel small(reduced);
  const Liouvillian ls = small.liouvillian();
  const std::vector<double> grid{0.0, 1e-4};
  const auto traj = evolve(small.spin_pm1_state(), ls, grid);
  const double td = trace_distance(traj.states.back(), steady_state(ls));
  check(td <= 1e-6, "steady state vs integration");

  // Two-level Lorentzian width.
  const double gamma = 1e8, pump = 1e6, deph = 2e8;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
  auto op = [](int i, int j) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(i, j) = 1.0;
    return SparseMatrix(m.sparseView());
  };
  const std::vector<CollapseChannel> ch{{ChannelKind::kEmission, "sigma", gamma, op(0, 1), 0, {}},
                                        {ChannelKind::kOpticalDephasing, "P_e", deph, op(1, 1), -1, {}},
                                        {ChannelKind::kSpinRelaxation, "pump", pump, op(1, 0), -1, {}}};
  const Liouvillian l2 = Liouvillian::build(h, ch);
  const double hwhm = 0.5 * (gamma + pump + deph);
  std::vector<double> w;
  for (int i = -200; i <= 200; ++i) w.push_back(0.05 * hwhm * i);
  const std::vector<double> q{1.0};
  const auto sp = emission_spectrum(l2, ch, steady_state(l2), q, 0.0, w);
  Eigen::MatrixXd a(static_cast<Eigen::Index>(w.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double x = w[i] / hwhm;
    a.row(static_cast<Eigen::Index>(i)) << 1.0, x, x * x;
    y(static_cast<Eigen::Index>(i)) = 1.0 / sp.total[i];
  }
  const Eigen::Vector3d p = a.colPivHouseholderQr().solve(y);
  const double x0 = -p(1) / (2.0 * p(2));
  const double fitted = hwhm * std::sqrt(p(0) / p(2) - x0 * x0);
  check(std::abs(fitted / hwhm - 1.0) <= 0.02, "Lorentzian half-width");

  // Decoupling of a far particle.
  NVSetup far = particle;
  far.plasmonics->geometry.separation = 1e-3;
  far.plasmonics->nonlinear_rabi = true;
  double worst_far = 0.0;
  for (auto orient : {plasmonics::Orientation::kRadial, plasmonics::Orientation::kTangential}) {
    far.plasmonics->geometry.orientation = orient;
    const EmitterCoupling cf = EmitterCoupling::near_particle(far.nv, *far.plasmonics);
    const EmitterCoupling c0 = EmitterCoupling::free_space(far.nv);
    NVSetup near = far;
    near.plasmonics->geometry.separation = 20e-9;
    const EmitterCoupling cn = EmitterCoupling::near_particle(near.nv, *near.plasmonics);
    worst_far = std::max(worst_far, std::abs(cf.rabi_scale - 1.0));
    for (std::size_t k = 0; k < cf.emission_rates.size(); ++k) {
      worst_far = std::max(worst_far, std::abs(cf.emission_rates[k] / c0.emission_rates[k] - 1.0));
      worst_far = std::max(worst_far, cf.nonradiative_rates[k] / c0.emission_rates[k]);
      worst_far = std::max(worst_far, std::abs(cf.quantum_efficiency[k] - 1.0));
      worst_far = std::max(worst_far, std::abs(cf.nonlinear_coefficients[k]) / std::abs(cn.nonlinear_coefficients[k]));
    }
  }
  check(worst_far <= 1e-6, "R -> infinity decoupling");

  // Q in [0, 1] over both tables, both orientations and a range of R.
  double q_min = 1.0, q_max = 0.0;
  int q_points = 0;
  for (const char* material : {"silver", "gold"}) {
    for (double eps_b : {1.0, 5.885}) {
      RunConfig c = parse_config_string(std::string("plasmonics:\n  material: ") + material +
                                        "\n  background_permittivity: " + std::to_string(eps_b) + "\n");
      const NVSetup base = c.setup();
      const auto& particle_cfg = base.plasmonics->particle;
      const double nb = particle_cfg.background_index();
      for (double e : particle_cfg.material->energies_ev()) {
        const double omega = units::ev_to_angular(e);
        std::complex<double> alpha;
        try {
          alpha = particle_cfg.polarizability(omega);
        } catch (const NumericError&) {
          continue;
        }
        for (double R = 11e-9; R <= 100e-9; R += 1e-9) {
          for (auto orient : {plasmonics::Orientation::kRadial, plasmonics::Orientation::kTangential}) {
            const double g = plasmonics::decay_rate_ratio(orient, omega, R, alpha, nb);
            const double nr = plasmonics::nonradiative_rate_ratio(orient, omega, R, alpha, nb);
            const double qv = plasmonics::relative_quantum_efficiency(g, nr);
            q_min = std::min(q_min, qv);
            q_max = std::max(q_max, qv);
            ++q_points;
          }
        }
      }
    }
  }
  check(q_min >= 0.0 && q_max <= 1.0, "Q in [0, 1]");

  o.detail << checks << " checks; trace annihilation " << worst_trace << ", min eigenvalue " << worst_eig
           << ", residual " << worst_res << ", integration distance " << td << ", half-width ratio "
           << fitted / hwhm << ", decoupling " << worst_far << ", Q in [" << q_min << ", " << q_max << "] over "
           << q_points << " points";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--threads" && i + 1 < argc) {
      g_threads = std::max(1, std::atoi(argv[++i]));
    } else if (a == "--help" || a == "-h") {
      std::printf("usage: nvps_acceptance [--threads N] [C1 ... C8]\n");
      return 0;
    } else {
      selected.insert(a);
    }
  }

  const std::vector<Criterion> criteria{
      {"C1", "Zeeman dip positions at 4.4 mT", 60, zeeman_dips},
      {"C2", "isolated-NV |0> and |+-1> traces", 60, isolated_traces},
      {"C3", "free-space reference sensitivity", 120, reference_sensitivity},
      {"C4", "plasmonic ODMR enhancements at 0.1 mW/um^2", 300, plasmonic_odmr},
      {"C5", "baseline enhancement versus intensity", 600, intensity_trend},
      {"C6", "time-domain enhancement, NV perpendicular to Ag", 120, time_domain},
      {"C7", "Au-dimer ZPL enhancement and theta dependence", 120, gold_dimer},
      {"C8", "property suite", 30, property_suite},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = dt < c.budget_s;
    if (!in_time) o.detail << " [failed: runtime budget]";
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s %s  %s: %s (%.1f s, budget %.0f s)\n", c.id.c_str(), pass ? "PASS" : "FAIL", c.title.c_str(),
                o.detail.str().c_str(), dt, c.budget_s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
