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

#include "nvps/photoluminescence.hpp"

#include "nvps/errors.hpp"

namespace nvps {

double excited_population(const LevelScheme& scheme, const DensityOperator& rho) {
  double p = 0.0;
  for (Spin m : kSpins) p += rho.population(scheme.excited(0, m));
  return p;
}

double pl_rate(const LevelScheme& scheme, const DensityOperator& rho,
               std::span<const double> emission_rates, std::span<const double> quantum_efficiency) {
  const auto bands = static_cast<std::size_t>(scheme.max_band() + 1);
  if (emission_rates.size() != bands || quantum_efficiency.size() != bands) {
    throw UsageError("PL needs one emission rate and one Q per band");
  }
  if (rho.dim() != scheme.dim()) throw UsageError("density operator does not match the level scheme");
  double weight = 0.0;
  for (std::size_t k = 0; k < bands; ++k) weight += quantum_efficiency[k] * emission_rates[k];
  return weight * excited_population(scheme, rho);
}

}  // namespace nvps
