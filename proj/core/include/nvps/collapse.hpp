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

#ifndef NVPS_COLLAPSE_HPP
#define NVPS_COLLAPSE_HPP

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "nvps/level_scheme.hpp"
#include "nvps/parameters.hpp"

namespace nvps {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>>;

enum class ChannelKind {
  kEmission,
  kGroundVibronic,
  kExcitedVibronic,
  kOpticalDephasing,
  kSpinRelaxation,
  kSpinDephasing,
  kIntersystemCrossing,
  kSingletDecay,
};

const char* channel_kind_name(ChannelKind kind);

struct CollapseChannel {
  ChannelKind kind;
  std::string label;
  double rate;      // Gamma_x, 1/s
  SparseMatrix op;  // L_x
  int band = -1;    // k for emission and ground-vibronic channels
  std::optional<Spin> spin;
};

/// All 6n+20 channels. emission_rates holds gamma_k per band.
std::vector<CollapseChannel> build_collapse_channels(const LevelScheme& scheme,
                                                     const NVParameters& nv,
                                                     std::span<const double> emission_rates);

}  // namespace nvps

#endif  // NVPS_COLLAPSE_HPP
