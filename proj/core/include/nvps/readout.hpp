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

#ifndef NVPS_READOUT_HPP
#define NVPS_READOUT_HPP

#include <string>
#include <vector>

#include "nvps/evolve.hpp"
#include "nvps/nv_model.hpp"

namespace nvps {

struct ReadoutOptions {
  double window = 20e-6;  // s
  int samples = 2001;
  /// |PL(t) - PL_ss| / PL_ss below which a trace counts as settled.
  double stabilization_threshold = 0.01;
  EvolveOptions evolve;
};

struct TimeTrace {
  std::string label;          // "0" or "pm1"
  std::vector<double> time;   // s
  std::vector<double> pl;     // photons / s
};

struct ReadoutResult {
  TimeTrace zero;
  TimeTrace pm1;
  std::vector<double> difference;  // PL_0 - PL_pm1
  double contrast_area = 0.0;      // trapezoidal integral of the difference, photons
  double stabilization_time = 0.0; // s, later of the two traces
  double steady_pl = 0.0;
};

struct ReadoutComparison {
  double steady_enhancement = 1.0;
  double area_enhancement = 1.0;
  /// reference stabilization time / stabilization time.
  double stabilization_speedup = 1.0;
};

/// First sample after which the trace stays within `threshold` of `steady`.
/// WindowError if the last sample is still outside.
double stabilization_time(const TimeTrace& trace, double steady, double threshold);

/// PL(t) from g_0|0> and from the |+-1> mixture under the model's drives.
ReadoutResult time_domain_readout(const NVModel& model, const ReadoutOptions& options = {});

ReadoutComparison compare_readout(const ReadoutResult& result, const ReadoutResult& reference);

}  // namespace nvps

#endif  // NVPS_READOUT_HPP
