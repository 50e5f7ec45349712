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

#include "nvps/collapse.hpp"

#include <cmath>
#include <utility>

#include "nvps/errors.hpp"

namespace nvps {

namespace {

using Triplet = Eigen::Triplet<std::complex<double>>;

SparseMatrix from_entries(int dim, std::initializer_list<std::pair<std::pair<int, int>, double>> e) {
  std::vector<Triplet> t;
  for (const auto& [rc, v] : e) t.emplace_back(rc.first, rc.second, v);
  SparseMatrix m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

SparseMatrix transition(int dim, int to, int from) { return from_entries(dim, {{{to, from}, 1.0}}); }

std::string spin_tag(Spin s) {
  switch (s) {
    case Spin::kPlus: return "+1";
    case Spin::kZero: return "0";
    case Spin::kMinus: return "-1";
  }
  return "?";
}

}  // namespace

const char* channel_kind_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kEmission: return "emission";
    case ChannelKind::kGroundVibronic: return "ground_vibronic";
    case ChannelKind::kExcitedVibronic: return "excited_vibronic";
    case ChannelKind::kOpticalDephasing: return "optical_dephasing";
    case ChannelKind::kSpinRelaxation: return "spin_relaxation";
    case ChannelKind::kSpinDephasing: return "spin_dephasing";
    case ChannelKind::kIntersystemCrossing: return "isc";
    case ChannelKind::kSingletDecay: return "singlet_decay";
  }
  return "unknown";
}

std::vector<CollapseChannel> build_collapse_channels(const LevelScheme& scheme,
                                                     const NVParameters& nv,
                                                     std::span<const double> emission_rates) {
  const int n = scheme.max_band();
  const int dim = scheme.dim();
  if (static_cast<int>(emission_rates.size()) != n + 1) {
    throw AssemblyError("need " + std::to_string(n + 1) + " emission rates, got " +
                        std::to_string(emission_rates.size()));
  }
  for (double g : emission_rates) {
    if (!(g >= 0.0) || !std::isfinite(g)) throw AssemblyError("emission rates must be finite and >= 0");
  }

  std::vector<CollapseChannel> out;
  out.reserve(static_cast<std::size_t>(6 * n + 20));

  for (int k = 0; k <= n; ++k) {
    for (Spin m : kSpins) {
      out.push_back({ChannelKind::kEmission, "sigma_" + std::to_string(k) + "," + spin_tag(m),
                     emission_rates[static_cast<std::size_t>(k)],
                     transition(dim, scheme.ground(k, m), scheme.excited(0, m)), k, m});
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (Spin m : kSpins) {
      out.push_back({ChannelKind::kGroundVibronic,
                     "g" + std::to_string(k) + "->g" + std::to_string(k - 1) + "," + spin_tag(m),
                     nv.vibronic.vibronic_decay_rate(k),
                     transition(dim, scheme.ground(k - 1, m), scheme.ground(k, m)), k, m});
    }
  }
  for (Spin m : kSpins) {
    out.push_back({ChannelKind::kExcitedVibronic, "e1->e0," + spin_tag(m),
                   nv.drive.excited_vibronic_decay,
                   transition(dim, scheme.excited(0, m), scheme.excited(1, m)), -1, m});
  }
  {
    std::vector<Triplet> t;
    for (int j = 0; j < 2; ++j) {
      for (Spin m : kSpins) t.emplace_back(scheme.excited(j, m), scheme.excited(j, m), 1.0);
    }
    SparseMatrix p(dim, dim);
    p.setFromTriplets(t.begin(), t.end());
    out.push_back({ChannelKind::kOpticalDephasing, "P_e", nv.drive.optical_dephasing, p, -1, {}});
  }
  for (Spin m : {Spin::kPlus, Spin::kMinus}) {
    out.push_back({ChannelKind::kSpinRelaxation, "e0:" + spin_tag(m) + "->0",
                   nv.spin.excited_relaxation,
                   transition(dim, scheme.excited(0, Spin::kZero), scheme.excited(0, m)), -1, m});
    out.push_back({ChannelKind::kSpinRelaxation, "g0:" + spin_tag(m) + "->0",
                   nv.spin.ground_relaxation,
                   transition(dim, scheme.ground(0, Spin::kZero), scheme.ground(0, m)), -1, m});
  }
  out.push_back({ChannelKind::kSpinDephasing, "e0:P+-P-", nv.spin.excited_dephasing,
                 from_entries(dim, {{{scheme.excited(0, Spin::kPlus), scheme.excited(0, Spin::kPlus)}, 1.0},
                                    {{scheme.excited(0, Spin::kMinus), scheme.excited(0, Spin::kMinus)}, -1.0}}),
                 -1, {}});
  out.push_back({ChannelKind::kSpinDephasing, "g0:P+-P-", nv.spin.ground_dephasing,
                 from_entries(dim, {{{scheme.ground(0, Spin::kPlus), scheme.ground(0, Spin::kPlus)}, 1.0},
                                    {{scheme.ground(0, Spin::kMinus), scheme.ground(0, Spin::kMinus)}, -1.0}}),
                 -1, {}});

  const int s1 = scheme.upper_singlet();
  const int s0 = scheme.lower_singlet();
  for (Spin m : kSpins) {
    const double rate = m == Spin::kZero ? nv.isc.excited_0_to_singlet : nv.isc.excited_pm1_to_singlet;
    out.push_back({ChannelKind::kIntersystemCrossing, "e0," + spin_tag(m) + "->s1", rate,
                   transition(dim, s1, scheme.excited(0, m)), -1, m});
  }
  for (Spin m : kSpins) {
    const double rate = m == Spin::kZero ? nv.isc.singlet_to_ground_0 : nv.isc.singlet_to_ground_pm1;
    out.push_back({ChannelKind::kIntersystemCrossing, "s0->g0," + spin_tag(m), rate,
                   transition(dim, scheme.ground(0, m), s0), -1, m});
  }
  out.push_back({ChannelKind::kSingletDecay, "s1->s0", nv.isc.singlet_decay, transition(dim, s0, s1), -1, {}});
  return out;
}

}  // namespace nvps
