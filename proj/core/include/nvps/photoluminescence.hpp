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

#ifndef NVPS_PHOTOLUMINESCENCE_HPP
#define NVPS_PHOTOLUMINESCENCE_HPP

#include <span>

#include "nvps/density_operator.hpp"
#include "nvps/level_scheme.hpp"

namespace nvps {

/// PL = sum_k sum_m Q_k gamma_k rho_{e0m,e0m}, in photons per second.
double pl_rate(const LevelScheme& scheme, const DensityOperator& rho,
               std::span<const double> emission_rates, std::span<const double> quantum_efficiency);

/// Total e_0 population.
double excited_population(const LevelScheme& scheme, const DensityOperator& rho);

}  // namespace nvps

#endif  // NVPS_PHOTOLUMINESCENCE_HPP
