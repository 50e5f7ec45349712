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

#include "nvps/evolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <sstream>

#include "nvps/errors.hpp"

namespace nvps {

namespace {

// Hairer-Wanner SDIRK4: stiffly accurate, L-stable, gamma = 1/4.
constexpr double kGamma = 0.25;
constexpr int kStages = 5;
constexpr double kA[kStages][kStages - 1] = {
    {0.0, 0.0, 0.0, 0.0},
    {1.0 / 2.0, 0.0, 0.0, 0.0},
    {17.0 / 50.0, -1.0 / 25.0, 0.0, 0.0},
    {371.0 / 1360.0, -137.0 / 2720.0, 15.0 / 544.0, 0.0},
    {25.0 / 24.0, -49.0 / 48.0, 125.0 / 16.0, -85.0 / 12.0},
};
// b - b_hat, with b the last row of A (plus gamma) and b_hat of order 3.
constexpr double kErr[kStages] = {25.0 / 24.0 - 59.0 / 48.0, -49.0 / 48.0 + 17.0 / 96.0,
                                  125.0 / 16.0 - 225.0 / 32.0, 0.0, 0.25};
constexpr double kStepAnchor = 1e-18;

using LU = LiouvillianLU;

/// LU factorisations of (I - h gamma L), reused across steps of equal size.
class StageSolvers {
 public:
  StageSolvers(const Liouvillian& l, std::size_t capacity, EvolveStats& stats)
      : l_(l), capacity_(std::max<std::size_t>(capacity, 2)), stats_(stats) {
    identity_.resize(l.size(), l.size());
    identity_.setIdentity();
  }

  /// Returns the factorisation for a step within 1e-9 of h, and the exact step
  /// size it was built for.
  std::pair<double, const LU*> get(double h) {
    ++clock_;
    for (auto& e : entries_) {
      if (std::abs(e.h - h) <= 1e-9 * h) {
        e.last_use = clock_;
        return {e.h, e.lu.get()};
      }
    }
    if (entries_.size() >= capacity_) {
      auto oldest = std::min_element(entries_.begin(), entries_.end(),
                                     [](const auto& a, const auto& b) { return a.last_use < b.last_use; });
      entries_.erase(oldest);
    }
    auto lu = std::make_unique<LU>();
    const SparseMatrix m = identity_ - (h * kGamma) * l_.matrix();
    lu->compute(m);
    if (lu->info() != Eigen::Success) {
      throw SolverError("stage matrix factorisation failed: " + lu->lastErrorMessage());
    }
    ++stats_.factorizations;
    entries_.push_back({h, std::move(lu), clock_});
    return {h, entries_.back().lu.get()};
  }

 private:
  struct Entry {
    double h;
    std::unique_ptr<LU> lu;
    std::size_t last_use;
  };
  const Liouvillian& l_;
  std::size_t capacity_;
  EvolveStats& stats_;
  SparseMatrix identity_;
  std::vector<Entry> entries_;
  std::size_t clock_ = 0;
};

double quantize(double h) {
  const double k = std::floor(4.0 * std::log2(h / kStepAnchor));
  return kStepAnchor * std::exp2(k / 4.0);
}

}  // namespace

EvolveStats evolve(const DensityOperator& rho0, const Liouvillian& l, std::span<const double> t_grid,
                   const EvolveObserver& observer, const EvolveOptions& options) {
  if (rho0.dim() != l.hilbert_dim()) throw UsageError("initial state dimension mismatch");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 0.0) || (i > 0 && t_grid[i] < t_grid[i - 1])) {
      throw UsageError("time grid must be non-negative and non-decreasing");
    }
  }
  if (!(options.rtol > 0.0) || !(options.atol > 0.0)) throw UsageError("tolerances must be > 0");

  EvolveStats stats;
  StageSolvers solvers(l, options.factorization_cache, stats);
  const auto& lm = l.matrix();
  Eigen::VectorXcd y = rho0.vec();
  double t = 0.0;
  double h = quantize(std::max(options.initial_step, options.min_step));
  std::size_t next = 0;

  auto emit_due = [&]() {
    while (next < t_grid.size() && t_grid[next] <= t) {
      observer(t_grid[next], DensityOperator::from_vector(y));
      ++next;
    }
  };
  emit_due();

  std::array<Eigen::VectorXcd, kStages> k;
  Eigen::VectorXcd stage, y_new, err;
  while (next < t_grid.size()) {
    if (stats.accepted + stats.rejected >= options.max_steps) {
      throw StiffnessError("step budget exhausted at t = " + std::to_string(t) + " s");
    }
    const double target = t_grid[next];
    const double remaining = target - t;
    const bool landing = h >= remaining * (1.0 - 1e-12);
    auto [step, lu] = solvers.get(landing ? remaining : h);

    // (I - h gamma L) k_i = L (y + h sum_j a_ij k_j)
    for (int i = 0; i < kStages; ++i) {
      stage = y;
      for (int j = 0; j < i; ++j) stage += (step * kA[i][j]) * k[static_cast<std::size_t>(j)];
      k[static_cast<std::size_t>(i)] = lu->solve(lm * stage);
    }
    y_new = stage + (step * kGamma) * k[kStages - 1];
    stage.setZero();
    for (int i = 0; i < kStages; ++i) stage += (step * kErr[i]) * k[static_cast<std::size_t>(i)];
    // Filtered through the stage matrix so stiff components do not dominate.
    err = lu->solve(stage);

    double sq = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double sc = options.atol + options.rtol * std::max(std::abs(y(i)), std::abs(y_new(i)));
      sq += std::norm(err(i)) / (sc * sc);
    }
    const double norm = std::sqrt(sq / static_cast<double>(y.size()));
    const double grow = norm > 0.0 ? 0.9 * std::pow(norm, -0.25) : 4.0;

    if (norm <= 1.0 && y_new.allFinite()) {
      ++stats.accepted;
      y = y_new;
      t = landing ? target : t + step;
      const double proposed = quantize(step * std::clamp(grow, 0.2, 4.0));
      h = landing ? std::max(h, proposed) : proposed;
      emit_due();
    } else {
      ++stats.rejected;
      h = quantize(step * std::clamp(grow, 0.1, 0.5));
    }
    if (h < options.min_step) {
      std::ostringstream msg;
      msg << "step size " << h << " s fell below " << options.min_step << " s at t = " << t
          << " s (error norm " << norm << ")";
      throw StiffnessError(msg.str());
    }
  }
  return stats;
}

Trajectory evolve(const DensityOperator& rho0, const Liouvillian& l, std::span<const double> t_grid,
                  const EvolveOptions& options) {
  Trajectory out;
  out.stats = evolve(
      rho0, l, t_grid,
      [&out](double t, const DensityOperator& rho) {
        out.times.push_back(t);
        out.states.push_back(rho);
      },
      options);
  return out;
}

}  // namespace nvps
