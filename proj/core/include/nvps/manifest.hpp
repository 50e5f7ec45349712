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

#ifndef NVPS_MANIFEST_HPP
#define NVPS_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nvps/config.hpp"

namespace nvps {

std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

/// JSON manifest: command, the canonical config, physical constants, input
/// table hashes, resolved model quantities, tolerances and output hashes.
std::string build_manifest(Command command, const RunConfig& config, const std::filesystem::path& out_dir,
                           const std::vector<std::string>& outputs);

/// Command and config stored in a manifest.
std::pair<Command, RunConfig> config_from_manifest(const std::filesystem::path& manifest);

struct ReplayReport {
  std::vector<std::string> matched;
  std::vector<std::string> mismatched;  // hash differs
  std::vector<std::string> missing;     // recorded but not produced

  bool ok() const { return mismatched.empty() && missing.empty(); }
};

/// Reruns the manifest's experiment into `work_dir` and compares output hashes
/// with the recorded ones.
ReplayReport replay_manifest(const std::filesystem::path& manifest, const std::filesystem::path& work_dir,
                             int threads = 1);

}  // namespace nvps

#endif  // NVPS_MANIFEST_HPP
