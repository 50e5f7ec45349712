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

#ifndef NVPS_CONFIG_HPP
#define NVPS_CONFIG_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nvps/figures_of_merit.hpp"
#include "nvps/material.hpp"
#include "nvps/nv_model.hpp"
#include "nvps/readout.hpp"
#include "nvps/spectrum.hpp"
#include "nvps/units.hpp"

namespace nvps {

enum class Command { kOdmr, kTrace, kSpectrum, kSweep, kFom };

const char* command_name(Command c);
std::optional<Command> command_from_name(const std::string& name);

/// Physical dimension of a configuration value. Each accepts its own set of
/// unit suffixes; dimensionless values are plain numbers.
enum class Dimension {
  kFrequency,         // Hz, kHz, MHz, GHz, THz
  kAngularFrequency,  // rad/s, or Hz, kHz, MHz, GHz times 2 pi
  kRate,              // 1/s, /s, /ms, /us, /ns, Hz... or a lifetime: s, ms, us, ns, ps, fs
  kEnergy,            // J, eV, meV
  kMagneticField,     // T, mT, uT, G
  kIntensity,         // W/m^2, mW/um^2, uW/um^2, W/cm^2, kW/cm^2, MW/cm^2
  kLength,            // m, um, nm
  kDipole,            // D, C*m
  kAngle,             // rad, deg
  kTime,              // s, ms, us, ns
  kDimensionless,
};

/// "4.4 mT" -> 4.4e-3. Throws ConfigError on a missing or foreign unit.
double parse_quantity(const std::string& text, Dimension dimension);
/// Canonical SI spelling; parse_quantity(format_quantity(x)) == x exactly.
std::string format_quantity(double value, Dimension dimension);

/// Directory holding the bundled tables: $NVPS_DATA_DIR, else the source tree
/// copy, else the installed copy.
std::filesystem::path data_directory();

struct MaterialSpec {
  /// "silver", "gold" or a CSV path (relative to the config file, then the
  /// data directory).
  std::string source = "silver";
  plasmonics::Interpolation interpolation = plasmonics::Interpolation::kLinear;
};

struct PlasmonicsSpec {
  MaterialSpec material;
  double radius = 10e-9;
  double separation = 20e-9;
  double background_permittivity = 1.0;
  plasmonics::Orientation orientation = plasmonics::Orientation::kRadial;
  std::optional<plasmonics::AngleMode> angle;
  bool nonlinear_rabi = false;
};

struct OdmrSpec {
  double start = 2.60e9;  // Hz
  double stop = 3.14e9;
  int points = 271;
};

struct SpectrumSpec {
  double start = units::ev_to_joule(1.5);  // J
  double stop = units::ev_to_joule(2.1);
  int points = 601;
  FieldZone zone = FieldZone::kFar;
  double scale = 1.0;
  /// ZPL-window enhancement against the reference.
  double zpl_half_window = units::ev_to_joule(0.010);  // J
  int zpl_points = 201;
  double far_field_scale = 0.78;
  /// Angles between 0 and pi/2 for a PL(theta) scan; 0 disables it.
  int theta_points = 0;
};

struct SweepSpec {
  std::vector<double> intensities{1e6, 1e7, 1e8, 1e9};  // W/m^2
};

struct FomSpec {
  std::filesystem::path curve;
  std::filesystem::path reference;
  FomOptions options;
};

/// Fully resolved run configuration. Physical values are SI.
struct RunConfig {
  std::filesystem::path source;    // config file; empty for in-memory text
  std::filesystem::path base_dir;  // relative file references start here
  std::optional<Command> experiment;

  /// Vibronic table file, empty for the built-in values.
  std::filesystem::path vibronic_table;
  NVParameters nv;
  /// Drive photon energy set to the particle's polarizability peak.
  bool drive_at_plasmon_peak = false;
  /// n_b given explicitly; otherwise sqrt(eps_b) with a particle and 1 without.
  bool background_index_set = false;
  HamiltonianOptions hamiltonian;
  std::optional<PlasmonicsSpec> plasmonics;
  /// Also simulate the particle-free reference and report enhancements.
  bool reference = true;

  OdmrSpec odmr;
  ReadoutOptions trace;
  SpectrumSpec spectrum;
  SweepSpec sweep;
  FomSpec fom;
  std::filesystem::path output_dir = "nvps-out";

  /// Resolves file references, the plasmon-peak drive and n_b, and validates.
  NVSetup setup() const;
  /// Absolute path of the material table in use, if any.
  std::optional<std::filesystem::path> material_path() const;
};

/// Missing keys keep their defaults. Unknown keys, missing units and
/// out-of-range values raise ParseError naming the line.
RunConfig parse_config(const std::filesystem::path& path);
RunConfig parse_config_string(const std::string& text, const std::string& name = "<config>",
                              const std::filesystem::path& base_dir = {});

/// YAML with every value spelled out in canonical units.
std::string serialize_config(const RunConfig& config);

}  // namespace nvps

#endif  // NVPS_CONFIG_HPP
