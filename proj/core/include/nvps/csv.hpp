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

#ifndef NVPS_CSV_HPP
#define NVPS_CSV_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "nvps/odmr.hpp"

namespace nvps {

struct CsvTable {
  std::vector<std::string> comments;  // written as leading '# ' lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Shortest text that parses back to the same double.
std::string format_double(double v);

std::string format_csv(const CsvTable& table);
/// Two-column `quantity,value` summary.
std::string format_summary(const std::vector<std::string>& comments,
                           const std::vector<std::pair<std::string, double>>& values);

/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Numeric CSV with a header row; '#' lines are skipped. ParseError on
/// malformed rows.
CsvTable read_csv(const std::filesystem::path& path);

/// ODMR curve from a CSV holding `freq_GHz` and `PL` columns.
OdmrCurve read_odmr_csv(const std::filesystem::path& path);

}  // namespace nvps

#endif  // NVPS_CSV_HPP
