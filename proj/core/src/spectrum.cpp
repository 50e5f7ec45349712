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

#include "nvps/spectrum.hpp"

#include <memory>

#include "nvps/errors.hpp"

namespace nvps {

EmissionSpectrum emission_spectrum(const Liouvillian& l, const std::vector<CollapseChannel>& channels,
                                   const DensityOperator& rho_ss,
                                   std::span<const double> quantum_efficiency,
                                   double drive_angular_frequency,
                                   std::span<const double> angular_frequency_grid, FieldZone zone) {
  const int d = l.hilbert_dim();
  if (rho_ss.dim() != d) throw UsageError("steady state does not match the Liouvillian");

  struct Source {
    int band;
    double weight;
    Eigen::MatrixXcd sigma_adjoint;
    Eigen::VectorXcd b;
  };
  std::vector<Source> sources;
  int bands = 0;
  const Eigen::MatrixXcd& rho = rho_ss.matrix();
  for (const auto& ch : channels) {
    if (ch.kind != ChannelKind::kEmission) continue;
    if (ch.band < 0 || ch.band >= static_cast<int>(quantum_efficiency.size())) {
      throw UsageError("no quantum efficiency for emission band " + std::to_string(ch.band));
    }
    bands = std::max(bands, ch.band + 1);
    const Eigen::MatrixXcd sigma(ch.op);
    Eigen::MatrixXcd b = sigma * rho;
    b -= b.trace() * rho;
    const double q = zone == FieldZone::kFar ? quantum_efficiency[static_cast<std::size_t>(ch.band)] : 1.0;
    sources.push_back({ch.band, q * ch.rate, sigma.adjoint(),
                       Eigen::Map<const Eigen::VectorXcd>(b.data(), b.size())});
  }
  if (sources.empty()) throw UsageError("no emission channels supplied");

  EmissionSpectrum out;
  out.angular_frequency.assign(angular_frequency_grid.begin(), angular_frequency_grid.end());
  out.total.assign(angular_frequency_grid.size(), 0.0);
  out.bands.assign(static_cast<std::size_t>(bands), std::vector<double>(angular_frequency_grid.size(), 0.0));

  SparseMatrix id(l.size(), l.size());
  id.setIdentity();
  LiouvillianLU lu;
  bool analysed = false;
  // At w = 0 the resolvent is singular on the kernel of L. Every b is
  // traceless, so adding rho_ss tr(.) fixes the traceless solution.
  std::unique_ptr<LiouvillianLU> deflated;
  auto deflated_solver = [&]() -> const LiouvillianLU& {
    if (!deflated) {
      std::vector<Eigen::Triplet<std::complex<double>>> t;
      for (int c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < l.size(); ++r) {
          const auto v = rho(r % d, r / d);
          if (v != 0.0) t.emplace_back(static_cast<int>(r), c * d + c, v);
        }
      }
      SparseMatrix proj(l.size(), l.size());
      proj.setFromTriplets(t.begin(), t.end());
      deflated = std::make_unique<LiouvillianLU>();
      deflated->compute(SparseMatrix(proj - l.matrix()));
      if (deflated->info() != Eigen::Success) throw SolverError("deflated resolvent factorisation failed");
    }
    return *deflated;
  };
  for (std::size_t i = 0; i < angular_frequency_grid.size(); ++i) {
    const double w = angular_frequency_grid[i] - drive_angular_frequency;
    const bool at_zero = std::abs(w) <= 1e-12 * l.norm();
    if (!at_zero) {
      const SparseMatrix a = std::complex<double>(0.0, w) * id - l.matrix();
      if (!analysed) {
        lu.analyzePattern(a);
        analysed = true;
      }
      lu.factorize(a);
      if (lu.info() != Eigen::Success) {
        throw SolverError("resolvent factorisation failed at w = " + std::to_string(angular_frequency_grid[i]));
      }
    }
    const LiouvillianLU& solver = at_zero ? deflated_solver() : lu;
    for (const auto& s : sources) {
      const Eigen::VectorXcd x = solver.solve(s.b);
      const Eigen::Map<const Eigen::MatrixXcd> xm(x.data(), d, d);
      const double value = 2.0 * s.weight * (s.sigma_adjoint * xm).trace().real();
      out.bands[static_cast<std::size_t>(s.band)][i] += value;
      out.total[i] += value;
    }
  }
  return out;
}

}  // namespace nvps
