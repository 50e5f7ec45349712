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

#include "nvps/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "nvps/errors.hpp"

namespace nvps {

namespace fs = std::filesystem;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string format_csv(const CsvTable& table) {
  std::ostringstream out;
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) throw UsageError("CSV row width differs from the header");
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  return out.str();
}

std::string format_summary(const std::vector<std::string>& comments,
                           const std::vector<std::pair<std::string, double>>& values) {
  std::ostringstream out;
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "quantity,value\n";
  for (const auto& [k, v] : values) out << k << ',' << format_double(v) << '\n';
  return out.str();
}

void write_file_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

CsvTable read_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  CsvTable t;
  std::string line;
  int line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      t.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
      continue;
    }
    const auto cells = split(line);
    if (t.columns.empty()) {
      t.columns = cells;
      continue;
    }
    if (cells.size() != t.columns.size()) {
      throw ParseError(path.string(), line_no, "expected " + std::to_string(t.columns.size()) + " columns");
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      double v = 0.0;
      if (c == "nan") {
        v = std::nan("");
      } else {
        const auto r = std::from_chars(c.data(), c.data() + c.size(), v);
        if (r.ec != std::errc() || r.ptr != c.data() + c.size()) {
          throw ParseError(path.string(), line_no, "'" + c + "' is not a number");
        }
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw ParseError(path.string(), line_no, "missing header row");
  return t;
}

OdmrCurve read_odmr_csv(const fs::path& path) {
  const CsvTable t = read_csv(path);
  auto column = [&](const std::string& name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (t.columns[i] == name) return i;
    }
    throw ConfigError(path.string() + ": missing column '" + name + "'");
  };
  const std::size_t f = column("freq_GHz"), p = column("PL");
  OdmrCurve c;
  for (const auto& row : t.rows) {
    c.frequency.push_back(row[f] * 1e9);
    c.pl.push_back(row[p]);
  }
  try {
    c.validate();
  } catch (const UsageError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return c;
}

}  // namespace nvps
