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

#ifndef NVPS_EVOLVE_HPP
#define NVPS_EVOLVE_HPP

#include <functional>
#include <span>
#include <vector>

#include "nvps/density_operator.hpp"
#include "nvps/liouvillian.hpp"

namespace nvps {

struct EvolveOptions {
  double rtol = 1e-7;
  double atol = 1e-10;
  double initial_step = 1e-16;  // s
  double min_step = 1e-24;      // s; smaller steps raise StiffnessError
  std::size_t max_steps = 5'000'000;
  std::size_t factorization_cache = 48;
};

struct EvolveStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t factorizations = 0;
};

/// Called at every output time with the symmetrised state.
using EvolveObserver = std::function<void(double t, const DensityOperator& rho)>;

/// Adaptive L-stable five-stage SDIRK (order 4, embedded order 3)
/// integration of d rho/dt = L rho. The
/// integrator lands exactly on each requested time; t_grid must be
/// non-decreasing and start at or after 0 (rho_0 is the state at t = 0).
EvolveStats evolve(const DensityOperator& rho0, const Liouvillian& l,
                   std::span<const double> t_grid, const EvolveObserver& observer,
                   const EvolveOptions& options = {});

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityOperator> states;
  EvolveStats stats;
};

Trajectory evolve(const DensityOperator& rho0, const Liouvillian& l, std::span<const double> t_grid,
                  const EvolveOptions& options = {});

}  // namespace nvps

#endif  // NVPS_EVOLVE_HPP
