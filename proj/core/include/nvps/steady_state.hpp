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

#ifndef NVPS_STEADY_STATE_HPP
#define NVPS_STEADY_STATE_HPP

#include "nvps/density_operator.hpp"
#include "nvps/liouvillian.hpp"

namespace nvps {

struct SteadyStateOptions {
  /// Basis state whose population equation is swapped for the trace condition.
  int constraint_state = 0;
  /// Count closed communicating classes before solving.
  bool check_kernel = true;
  /// Required ||L rho|| / ||L||.
  double residual_tolerance = 1e-10;
};

/// Unique trace-one kernel vector of L, symmetrised. Throws
/// DegenerateSteadyStateError when more than one stationary class exists and
/// SolverError when the residual check fails.
DensityOperator steady_state(const Liouvillian& l, const SteadyStateOptions& options = {});

/// ||L rho|| / ||L||.
double steady_state_residual(const Liouvillian& l, const DensityOperator& rho);

/// Number of closed communicating classes of the population flow graph, a
/// lower bound on the kernel dimension.
int stationary_class_count(const Liouvillian& l);

}  // namespace nvps

#endif  // NVPS_STEADY_STATE_HPP
