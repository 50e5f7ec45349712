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

#ifndef NVPS_RUNNER_HPP
#define NVPS_RUNNER_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "nvps/config.hpp"

namespace nvps {

struct RunOptions {
  std::filesystem::path out_dir;  // empty: the config's output directory
  int threads = 1;
  /// Also write a matplotlib script that plots the CSVs.
  bool plot_script = false;
};

struct RunResult {
  std::filesystem::path out_dir;
  std::vector<std::string> outputs;  // file names inside out_dir, manifest excluded
  std::vector<std::pair<std::string, double>> summary;
  std::vector<std::string> notes;    // non-fatal findings, e.g. a dipless curve
};

/// Runs one experiment, writes its CSVs and `manifest.json` into the output
/// directory. Same config and data files give byte-identical CSVs.
RunResult run_experiment(Command command, const RunConfig& config, const RunOptions& options = {});

}  // namespace nvps

#endif  // NVPS_RUNNER_HPP
