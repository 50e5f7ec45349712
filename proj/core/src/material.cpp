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

#include "nvps/material.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

// Boost 1.74's pchip calls isnan unqualified.
using std::isnan;
#include <boost/math/interpolators/pchip.hpp>

#include "nvps/errors.hpp"
#include "nvps/units.hpp"

namespace nvps::plasmonics {

MaterialTable::MaterialTable(std::string name, std::vector<double> energies_ev,
                             std::vector<std::complex<double>> permittivity,
                             Interpolation interpolation)
    : name_(std::move(name)),
      energies_(std::move(energies_ev)),
      eps_(std::move(permittivity)),
      interpolation_(interpolation) {
  if (energies_.size() != eps_.size()) throw ConfigError(name_ + ": column lengths differ");
  if (energies_.size() < 2) throw ConfigError(name_ + ": need at least two permittivity rows");
  for (std::size_t i = 1; i < energies_.size(); ++i) {
    if (!(energies_[i] > energies_[i - 1])) {
      throw ConfigError(name_ + ": photon energies must be strictly increasing");
    }
  }
  for (const auto& e : eps_) {
    if (e.imag() < 0.0) throw ConfigError(name_ + ": Im(eps) must be >= 0 (passive medium)");
  }
  if (interpolation_ == Interpolation::kPchip) {
    if (energies_.size() < 4) throw ConfigError(name_ + ": PCHIP needs at least four rows");
    std::vector<double> re, im;
    for (const auto& e : eps_) {
      re.push_back(e.real());
      im.push_back(e.imag());
    }
    using boost::math::interpolators::pchip;
    spline_re_ = pchip<std::vector<double>>(std::vector<double>(energies_), std::move(re));
    spline_im_ = pchip<std::vector<double>>(std::vector<double>(energies_), std::move(im));
  }
}

MaterialTable MaterialTable::from_csv(const std::filesystem::path& path, std::string name,
                                      Interpolation interpolation) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open material table " + path.string());
  std::vector<double> energies;
  std::vector<std::complex<double>> eps;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line != "energy_eV,eps_real,eps_imag") {
        throw ParseError(path.string(), line_no, "expected header 'energy_eV,eps_real,eps_imag'");
      }
      continue;
    }
    std::stringstream ss(line);
    double e = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    if (!(ss >> e >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',') {
      throw ParseError(path.string(), line_no, "expected 'energy_eV,eps_real,eps_imag'");
    }
    energies.push_back(e);
    eps.emplace_back(re, im);
  }
  return MaterialTable(std::move(name), std::move(energies), std::move(eps), interpolation);
}

std::complex<double> MaterialTable::permittivity_at_energy(double energy_ev) const {
  if (!(energy_ev >= energies_.front() && energy_ev <= energies_.back())) {
    std::ostringstream msg;
    msg << name_ << ": photon energy " << energy_ev << " eV outside tabulated range ["
        << energies_.front() << ", " << energies_.back() << "] eV";
    throw RangeError(msg.str());
  }
  auto hi = std::lower_bound(energies_.begin(), energies_.end(), energy_ev);
  auto i = static_cast<std::size_t>(hi - energies_.begin());
  if (energies_[i] == energy_ev) return eps_[i];
  if (interpolation_ == Interpolation::kPchip) {
    // PCHIP preserves monotonicity, so Im(eps) stays >= 0 between nodes.
    return {spline_re_(energy_ev), std::max(0.0, spline_im_(energy_ev))};
  }
  const double t = (energy_ev - energies_[i - 1]) / (energies_[i] - energies_[i - 1]);
  return {eps_[i - 1].real() + t * (eps_[i].real() - eps_[i - 1].real()),
          eps_[i - 1].imag() + t * (eps_[i].imag() - eps_[i - 1].imag())};
}

std::complex<double> MaterialTable::permittivity(double angular_frequency) const {
  return permittivity_at_energy(units::angular_to_ev(angular_frequency));
}

std::string MaterialTable::to_csv() const {
  std::ostringstream out;
  out << std::setprecision(17) << "energy_eV,eps_real,eps_imag\n";
  for (std::size_t i = 0; i < energies_.size(); ++i) {
    out << energies_[i] << ',' << eps_[i].real() << ',' << eps_[i].imag() << '\n';
  }
  return out.str();
}

}  // namespace nvps::plasmonics
