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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "nvps/errors.hpp"
#include "nvps/evolve.hpp"
#include "nvps/nv_model.hpp"
#include "nvps/photoluminescence.hpp"
#include "nvps/spectrum.hpp"
#include "nvps/steady_state.hpp"
#include "nvps/units.hpp"

using namespace nvps;

namespace {

constexpr double kHbar = 1.054571817e-34;

NVSetup reduced_setup(int n) {
  NVSetup s;
  const auto full = VibronicTable::defaults();
  s.nv.vibronic = VibronicTable({full.rows().begin(), full.rows().begin() + n + 1});
  return s;
}

SparseMatrix sparse(const Eigen::MatrixXcd& m) { return m.sparseView(); }

Eigen::MatrixXcd ket_bra(int dim, int i, int j) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

// Two-level emitter, g = 0 and e = 1, rates in 1/s.
struct TwoLevel {
  double delta = 0.0;
  double omega = 0.0;
  double gamma = 1e8;
  double dephasing = 0.0;
  double pump = 0.0;

  Liouvillian liouvillian() const {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    h(1, 1) = kHbar * delta;
    h(1, 0) = h(0, 1) = -kHbar * omega;
    return Liouvillian::build(h, channels());
  }

  std::vector<CollapseChannel> channels() const {
    std::vector<CollapseChannel> c;
    c.push_back({ChannelKind::kEmission, "sigma", gamma, sparse(ket_bra(2, 0, 1)), 0, {}});
    if (dephasing > 0.0) {
      c.push_back({ChannelKind::kOpticalDephasing, "P_e", dephasing, sparse(ket_bra(2, 1, 1)), -1, {}});
    }
    if (pump > 0.0) {
      c.push_back({ChannelKind::kSpinRelaxation, "pump", pump, sparse(ket_bra(2, 1, 0)), -1, {}});
    }
    return c;
  }
};

}  // namespace

TEST_CASE("hamiltonian structure") {
  NVModel model{NVSetup{}};
  const auto h = model.hamiltonian(units::hz_to_angular(2.9e9));
  CHECK((h - h.adjoint()).norm() <= 1e-12 * h.norm());

  NVSetup quiet;
  quiet.nv.drive.intensity = 0.0;
  quiet.nv.spin.microwave_amplitude = 0.0;
  const auto hq = NVModel(quiet).hamiltonian(units::hz_to_angular(2.9e9));
  Eigen::MatrixXcd off = hq;
  off.diagonal().setZero();
  CHECK(off.norm() == 0.0);

  // Microwave on resonance with the ground |+1> line removes its detuning.
  NVSetup zee;
  zee.nv.spin.axial_field = 4.4e-3;
  const NVModel mz(zee);
  const double w = zeeman_frequencies(zee.nv.spin).ground_plus;
  const auto hz = mz.hamiltonian(w);
  const int g0p = mz.scheme().ground(0, Spin::kPlus);
  const int g0 = mz.scheme().ground(0, Spin::kZero);
  CHECK(std::abs(hz(g0p, g0p).real()) <= 1e-9 * kHbar * w);
  CHECK(hz(g0, g0).real() == 0.0);
}

TEST_CASE("collapse channel structure") {
  NVModel model{NVSetup{}};
  const auto& sc = model.scheme();
  CHECK(sc.dim() == 32);
  CHECK(model.channels().size() == 62);

  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(sc.dim(), sc.dim());
  int emission = 0;
  for (const auto& ch : model.channels()) {
    const Eigen::MatrixXcd op(ch.op);
    if (ch.kind == ChannelKind::kEmission) {
      sum += op.adjoint() * op;
      ++emission;
    }
    if (ch.kind == ChannelKind::kOpticalDephasing || ch.kind == ChannelKind::kSpinDephasing) {
      CHECK((op - op.adjoint()).norm() == 0.0);
    }
    if (ch.kind == ChannelKind::kSpinDephasing) CHECK(std::abs(op.trace()) == 0.0);
    CHECK(ch.rate >= 0.0);
  }
  CHECK(emission == 3 * (sc.max_band() + 1));
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(sc.dim(), sc.dim());
  for (Spin m : kSpins) expected(sc.excited(0, m), sc.excited(0, m)) = sc.max_band() + 1.0;
  CHECK((sum - expected).norm() == 0.0);
}

TEST_CASE("liouvillian basics") {
  const Liouvillian zero = Liouvillian::build(Eigen::MatrixXcd::Zero(4, 4), {});
  CHECK(zero.matrix().norm() == 0.0);

  NVSetup driven;
  driven.nv.drive.intensity = units::mw_per_um2_to_si(0.1);
  for (const NVModel& m : {NVModel(NVSetup{}), NVModel(driven), NVModel(reduced_setup(2))}) {
    const Liouvillian l = m.liouvillian(units::hz_to_angular(2.87e9));
    CHECK(l.trace_annihilation_error() <= 1e-9);
    // Independent check of the column-stacked trace row.
    const int d = l.hilbert_dim();
    Eigen::RowVectorXcd tr = Eigen::RowVectorXcd::Zero(d * d);
    for (int i = 0; i < d; ++i) tr(i * d + i) = 1.0;
    const Eigen::RowVectorXcd row = tr * l.dense();
    CHECK(row.norm() <= 1e-9 * l.norm());
  }
}

TEST_CASE("two-level steady state matches the Bloch solution") {
  for (double dephasing : {0.0, 3e8}) {
    for (double delta : {0.0, 2e8, -5e8}) {
      TwoLevel t;
      t.delta = delta;
      t.omega = 5e7;
      t.dephasing = dephasing;
      const DensityOperator rho = steady_state(t.liouvillian());
      const double g2 = 0.5 * (t.gamma + dephasing);
      const double om2 = t.omega * t.omega;
      const double ee = 2.0 * om2 * (g2 / t.gamma) / (delta * delta + g2 * g2 + 4.0 * om2 * g2 / t.gamma);
      CHECK(rho.population(1) == doctest::Approx(ee).epsilon(1e-9));
      CHECK(rho.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("two-level transient matches the Bloch solution") {
  TwoLevel t;
  t.omega = 3e8;
  t.dephasing = t.gamma;  // Gamma_2 = gamma
  const double g = t.gamma, om = t.omega;
  const double w_ss = -g * g / (g * g + 4.0 * om * om);
  const double y_ss = -2.0 * om * w_ss / g;
  std::vector<double> grid;
  for (int i = 0; i <= 200; ++i) grid.push_back(i * 2.5e-10);
  EvolveOptions o;
  o.rtol = 1e-9;
  o.atol = 1e-12;
  const auto traj = evolve(DensityOperator::pure(2, 0), t.liouvillian(), grid, o);
  REQUIRE(traj.states.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double tt = grid[i];
    const double c = std::cos(2.0 * om * tt), s = std::sin(2.0 * om * tt);
    const double dy = -y_ss, dw = -1.0 - w_ss;
    const double w = w_ss + std::exp(-g * tt) * (s * dy + c * dw);
    CHECK(traj.states[i].population(1) == doctest::Approx(0.5 * (1.0 + w)).epsilon(1e-5));
  }
}

TEST_CASE("integrator agrees with the dense matrix exponential") {
  NVSetup s = reduced_setup(2);
  s.nv.drive.intensity = units::mw_per_um2_to_si(1.0);
  const NVModel model(s);
  const Liouvillian l = model.liouvillian(units::hz_to_angular(2.87e9));
  const DensityOperator rho0 = model.spin_pm1_state();
  const std::vector<double> grid{0.0, 1e-9, 1e-8, 1e-7};
  EvolveOptions o;
  o.rtol = 1e-9;
  o.atol = 1e-13;
  const auto traj = evolve(rho0, l, grid, o);
  const Eigen::MatrixXcd dense = l.dense();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const Eigen::VectorXcd v = (dense * grid[i]).exp() * rho0.vec();
    CHECK(trace_distance(traj.states[i], DensityOperator::from_vector(v)) <= 1e-6);
  }
}

TEST_CASE("steady state properties of the full model") {
  NVSetup driven;
  driven.nv.drive.intensity = units::mw_per_um2_to_si(0.1);
  for (const NVSetup& s : {NVSetup{}, driven}) {
    const NVModel model(s);
    for (double f : {2.80e9, 2.87e9, 3.0e9}) {
      const Liouvillian l = model.liouvillian(units::hz_to_angular(f));
      const DensityOperator rho = steady_state(l);
      CHECK(rho.min_eigenvalue() >= -1e-9);
      CHECK(rho.hermiticity_error() <= 1e-12);
      CHECK(std::abs(rho.trace() - 1.0) <= 1e-12);
      CHECK(steady_state_residual(l, rho) <= 1e-10);
      CHECK(stationary_class_count(l) == 1);
    }
  }
}

TEST_CASE("undriven steady state rests in the ground spin manifold") {
  NVSetup s;
  s.nv.drive.intensity = 0.0;
  s.nv.spin.microwave_amplitude = 0.0;
  const NVModel model(s);
  const DensityOperator rho = model.steady_state();
  double g0 = 0.0;
  for (Spin m : kSpins) g0 += rho.population(model.scheme().ground(0, m));
  CHECK(g0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(model.pl(rho) <= 1e-12);
}

TEST_CASE("degenerate kernel is reported") {
  // Two disconnected levels: every mixture is stationary.
  const Liouvillian l = Liouvillian::build(Eigen::MatrixXcd::Zero(2, 2), {});
  CHECK(stationary_class_count(l) == 2);
  CHECK_THROWS_AS(steady_state(l), SolverError);
}

TEST_CASE("steady state agrees with long-time integration") {
  NVSetup s = reduced_setup(2);
  s.nv.drive.intensity = units::mw_per_um2_to_si(0.5);
  const NVModel model(s);
  const Liouvillian l = model.liouvillian(units::hz_to_angular(2.87e9));
  const DensityOperator ss = steady_state(l);
  const std::vector<double> grid{0.0, 1e-6, 1e-5, 1e-4, 1e-3};
  const auto traj = evolve(model.spin_zero_state(), l, grid);
  for (const auto& rho : traj.states) {
    CHECK(std::abs(rho.trace() - 1.0) <= 1e-9);
    CHECK(rho.min_eigenvalue() >= -1e-9);
  }
  CHECK(trace_distance(traj.states.back(), ss) <= 1e-6);
}

TEST_CASE("full model relaxes to the steady state within 1 ms") {
  const NVModel model{NVSetup{}};
  const Liouvillian l = model.liouvillian();
  const DensityOperator ss = steady_state(l);
  const int d = model.scheme().dim();
  std::vector<double> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(i * 1e-6);
  grid.push_back(1e-4);
  grid.push_back(1e-3);
  for (const DensityOperator& rho0 :
       {model.spin_pm1_state(), DensityOperator(Eigen::MatrixXcd::Identity(d, d) / double(d))}) {
    const auto traj = evolve(rho0, l, grid);
    for (std::size_t i = 0; i + 2 < grid.size(); ++i) {
      CHECK(std::abs(traj.states[i].trace() - 1.0) <= 1e-8);
    }
    CHECK(trace_distance(traj.states.back(), ss) <= 1e-8);
  }
}

TEST_CASE("photoluminescence trivial cases") {
  const NVModel model{NVSetup{}};
  const auto& sc = model.scheme();
  const auto& c = model.coupling();
  double weight = 0.0;
  for (int k = 0; k < c.band_count(); ++k) {
    weight += c.emission_rates[static_cast<std::size_t>(k)] * c.quantum_efficiency[static_cast<std::size_t>(k)];
  }
  CHECK(model.pl(DensityOperator::pure(sc.dim(), sc.ground(0, Spin::kZero))) == 0.0);
  CHECK(model.pl(DensityOperator::pure(sc.dim(), sc.excited(0, Spin::kPlus))) ==
        doctest::Approx(weight).epsilon(1e-14));
  CHECK(excited_population(sc, DensityOperator::pure(sc.dim(), sc.excited(0, Spin::kZero))) == 1.0);
  CHECK(excited_population(sc, DensityOperator::pure(sc.dim(), sc.excited(1, Spin::kZero))) == 0.0);
  CHECK(excited_population(sc, DensityOperator::pure(sc.dim(), sc.upper_singlet())) == 0.0);
}

TEST_CASE("two-level spectrum is a Lorentzian of the channel width") {
  TwoLevel t;
  t.delta = 4e8;
  t.pump = 1e6;
  t.dephasing = 2e8;
  const Liouvillian l = t.liouvillian();
  const DensityOperator rho = steady_state(l);
  const double hwhm = 0.5 * (t.gamma + t.pump + t.dephasing);
  const double drive = 1e15;
  std::vector<double> grid;
  for (int i = -400; i <= 400; ++i) grid.push_back(drive + t.delta + 0.05 * hwhm * i);
  const std::vector<double> q{1.0};
  const auto sp = emission_spectrum(l, t.channels(), rho, q, drive, grid);

  // Least-squares quadratic fit of 1/S in the detuning from the line centre.
  Eigen::MatrixXd a(static_cast<Eigen::Index>(grid.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = (grid[i] - drive - t.delta) / hwhm;
    a.row(static_cast<Eigen::Index>(i)) << 1.0, x, x * x;
    y(static_cast<Eigen::Index>(i)) = 1.0 / sp.total[i];
  }
  const Eigen::Vector3d p = a.colPivHouseholderQr().solve(y);
  const double centre = -p(1) / (2.0 * p(2));
  const double fitted = hwhm * std::sqrt(p(0) / p(2) - centre * centre);
  CHECK(std::abs(centre) < 1e-3);
  CHECK(fitted == doctest::Approx(hwhm).epsilon(0.02));
}

TEST_CASE("spectrum integrates to the emitted photon rate") {
  TwoLevel t;
  t.pump = 2e6;
  t.dephasing = 1e8;
  const Liouvillian l = t.liouvillian();
  const DensityOperator rho = steady_state(l);
  const double hwhm = 0.5 * (t.gamma + t.pump + t.dephasing);
  const double half_span = 2000.0 * hwhm;
  const int n = 400001;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = -half_span + 2.0 * half_span * i / (n - 1);
  const std::vector<double> q{1.0};
  const auto sp = emission_spectrum(l, t.channels(), rho, q, 0.0, grid);
  double integral = 0.0;
  for (int i = 1; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    integral += 0.5 * (sp.total[k] + sp.total[k - 1]) * (grid[k] - grid[k - 1]);
  }
  integral /= 2.0 * std::numbers::pi;
  // Share of a Lorentzian inside +-half_span.
  const double inside = 2.0 / std::numbers::pi * std::atan(half_span / hwhm);
  CHECK(integral == doctest::Approx(t.gamma * rho.population(1) * inside).epsilon(1e-4));
}

TEST_CASE("spectrum rejects mismatched inputs") {
  TwoLevel t;
  t.pump = 1e6;
  const Liouvillian l = t.liouvillian();
  const DensityOperator rho = steady_state(l);
  const std::vector<double> grid{0.0, 1.0};
  CHECK_THROWS_AS(emission_spectrum(l, t.channels(), rho, std::vector<double>{}, 0.0, grid), UsageError);
  CHECK_THROWS_AS(emission_spectrum(l, t.channels(), DensityOperator::pure(3, 0), std::vector<double>{1.0}, 0.0, grid),
                  UsageError);
}
