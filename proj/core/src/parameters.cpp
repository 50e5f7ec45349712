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

#include "nvps/parameters.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nvps/errors.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& field, const std::filesystem::path& path, int line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw ParseError(path.string(), line, "not a number: '" + field + "'");
  }
}

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace

VibronicTable::VibronicTable(std::vector<VibronicRow> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw ConfigError("vibronic table needs at least one row");
  if (rows_[0].phonon_angular_frequency != 0.0) {
    throw ConfigError("vibronic table row 0 must have zero phonon energy");
  }
  if (rows_[0].vibronic_decay_rate) {
    throw ConfigError("vibronic table row 0 has no lower level to decay into");
  }
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& r = rows_[k];
    if (!(r.free_decay_rate > 0.0)) {
      throw ConfigError("vibronic row " + std::to_string(k) + ": free decay rate must be > 0");
    }
    if (k == 0) continue;
    if (!(r.phonon_angular_frequency > rows_[k - 1].phonon_angular_frequency)) {
      throw ConfigError("vibronic row " + std::to_string(k) + ": energies must strictly increase");
    }
    if (!r.vibronic_decay_rate || !(*r.vibronic_decay_rate > 0.0)) {
      throw ConfigError("vibronic row " + std::to_string(k) + ": vibronic decay rate must be > 0");
    }
  }
}

VibronicTable VibronicTable::defaults() {
  // k, phonon energy (meV), gamma^f (MHz), gamma_{k,k-1} (THz)
  constexpr double kTable[8][3] = {
      {0.0, 0.69, 0.0},   {31.8, 2.42, 85.0}, {70.3, 8.57, 82.0}, {124.0, 7.57, 79.0},
      {168.0, 6.46, 88.0}, {221.0, 4.23, 65.0}, {275.0, 3.03, 71.0}, {319.0, 1.51, 86.0},
  };
  std::vector<VibronicRow> rows;
  for (int k = 0; k < 8; ++k) {
    VibronicRow r;
    r.phonon_angular_frequency = units::ev_to_angular(kTable[k][0] * 1e-3);
    r.free_decay_rate = kTable[k][1] * 1e6;
    if (k > 0) r.vibronic_decay_rate = kTable[k][2] * 1e12;
    rows.push_back(r);
  }
  return VibronicTable(std::move(rows));
}

VibronicTable VibronicTable::from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open vibronic table " + path.string());
  std::vector<VibronicRow> rows;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line != "k,energy_meV,gamma_f_MHz,gamma_vib_THz") {
        throw ParseError(path.string(), line_no,
                         "expected header 'k,energy_meV,gamma_f_MHz,gamma_vib_THz'");
      }
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(trim(f));
    if (line.back() == ',') fields.emplace_back();
    if (fields.size() != 4) throw ParseError(path.string(), line_no, "expected 4 columns");
    const int k = static_cast<int>(parse_number(fields[0], path, line_no));
    if (k != static_cast<int>(rows.size())) {
      throw ParseError(path.string(), line_no, "rows must be listed in order k = 0, 1, ...");
    }
    VibronicRow r;
    r.phonon_angular_frequency = units::ev_to_angular(parse_number(fields[1], path, line_no) * 1e-3);
    r.free_decay_rate = parse_number(fields[2], path, line_no) * 1e6;
    if (!fields[3].empty() && fields[3] != "-") {
      r.vibronic_decay_rate = parse_number(fields[3], path, line_no) * 1e12;
    }
    rows.push_back(r);
  }
  return VibronicTable(std::move(rows));
}

const VibronicRow& VibronicTable::row(int k) const {
  if (k < 0 || k >= size()) {
    throw RangeError("vibronic band " + std::to_string(k) + " outside 0.." + std::to_string(max_band()));
  }
  return rows_[static_cast<std::size_t>(k)];
}

double VibronicTable::vibronic_decay_rate(int k) const {
  const auto& r = row(k);
  if (!r.vibronic_decay_rate) throw UsageError("band 0 has no vibronic decay");
  return *r.vibronic_decay_rate;
}

std::string VibronicTable::to_csv() const {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "k,energy_meV,gamma_f_MHz,gamma_vib_THz\n";
  for (int k = 0; k < size(); ++k) {
    const auto& r = rows_[static_cast<std::size_t>(k)];
    out << k << ',' << units::angular_to_ev(r.phonon_angular_frequency) * 1e3 << ','
        << r.free_decay_rate * 1e-6 << ',';
    if (r.vibronic_decay_rate) out << *r.vibronic_decay_rate * 1e-12;
    out << '\n';
  }
  return out.str();
}

void SpinParameters::validate() const {
  if (!(ground_zero_field > excited_zero_field && excited_zero_field > 0.0)) {
    throw ConfigError("zero-field splittings must satisfy D_gs > D_es > 0");
  }
  require_non_negative(microwave_amplitude, "microwave amplitude");
  require_non_negative(ground_relaxation, "ground spin relaxation");
  require_non_negative(excited_relaxation, "excited spin relaxation");
  require_non_negative(ground_dephasing, "ground spin dephasing");
  require_non_negative(excited_dephasing, "excited spin dephasing");
  if (!std::isfinite(axial_field) || !std::isfinite(microwave_angular_frequency)) {
    throw ConfigError("spin fields must be finite");
  }
}

ISCParameters ISCParameters::defaults() {
  ISCParameters p;
  p.singlet_gap = units::ev_to_joule(1.19);
  p.excited_singlet_gap = units::ev_to_joule(0.4);
  return p;
}

void ISCParameters::validate() const {
  require_non_negative(excited_pm1_to_singlet, "gamma_es+-1");
  require_non_negative(excited_0_to_singlet, "gamma_es0");
  require_non_negative(singlet_to_ground_pm1, "gamma_sg+-1");
  require_non_negative(singlet_to_ground_0, "gamma_sg0");
  require_non_negative(singlet_decay, "gamma_s");
  if (!(excited_pm1_to_singlet > excited_0_to_singlet)) {
    throw ConfigError("ISC from |+-1> must exceed ISC from |0> (gamma_es+-1 > gamma_es0)");
  }
  if (!(singlet_to_ground_0 > singlet_to_ground_pm1)) {
    throw ConfigError("singlet return to |0> must dominate (gamma_sg0 > gamma_sg+-1)");
  }
}

OpticalDrive OpticalDrive::defaults() {
  OpticalDrive d;
  d.photon_energy = units::ev_to_joule(2.033);
  d.intensity = units::mw_per_um2_to_si(0.5);
  d.zpl_energy = units::ev_to_joule(1.941);
  d.base_dipole = units::debye_to_si(5.2);
  return d;
}

void OpticalDrive::validate() const {
  if (!(photon_energy > zpl_energy)) {
    throw ConfigError("drive photon energy must lie above the zero-phonon line");
  }
  if (!(zpl_energy > 0.0)) throw ConfigError("zero-phonon energy must be > 0");
  require_non_negative(intensity, "optical intensity");
  require_non_negative(optical_dephasing, "optical dephasing");
  require_non_negative(excited_vibronic_decay, "excited vibronic decay");
  require_non_negative(base_dipole, "base dipole moment");
  if (!(diamond_index >= 1.0)) throw ConfigError("diamond index must be >= 1");
  if (!(background_index >= 1.0)) throw ConfigError("background index must be >= 1");
}

double OpticalDrive::angular_frequency() const { return photon_energy / units::kHbar; }

double OpticalDrive::zpl_angular_frequency() const { return zpl_energy / units::kHbar; }

double OpticalDrive::field_amplitude() const {
  return field_amplitude_from_intensity(intensity, background_index);
}

double OpticalDrive::screening() const {
  return screening_factor(background_index * background_index, diamond_index * diamond_index);
}

void NVParameters::validate() const {
  spin.validate();
  isc.validate();
  drive.validate();
}

double dipole_moment(const VibronicTable& table, double base_dipole, int k) {
  return base_dipole * std::sqrt(table.free_decay_rate(k) / table.free_decay_rate(0));
}

ZeemanFrequencies zeeman_frequencies(const SpinParameters& spin) {
  const double zeeman = units::kLandeG * units::kBohrMagneton / units::kHbar * spin.axial_field;
  const double dg = units::hz_to_angular(spin.ground_zero_field);
  const double de = units::hz_to_angular(spin.excited_zero_field);
  return {dg + zeeman, dg - zeeman, de + zeeman, de - zeeman};
}

double field_amplitude_from_intensity(double intensity, double background_index) {
  if (!(intensity >= 0.0)) throw DomainError("optical intensity must be >= 0");
  if (!(background_index > 0.0)) throw DomainError("refractive index must be > 0");
  return std::sqrt(intensity /
                   (2.0 * background_index * units::kVacuumPermittivity * units::kSpeedOfLight));
}

double screening_factor(double background_permittivity, double diamond_permittivity) {
  return (2.0 * background_permittivity + diamond_permittivity) / (3.0 * background_permittivity);
}

double spin_rabi_frequency(double microwave_amplitude) {
  return units::kLandeG * units::kBohrMagneton * microwave_amplitude /
         (units::kHbar * std::sqrt(2.0));
}

}  // namespace nvps
