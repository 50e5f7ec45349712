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

#ifndef NVPS_PARAMETERS_HPP
#define NVPS_PARAMETERS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace nvps {

/// One ground vibronic band: phonon energy above g_0, free-space optical decay
/// rate of the e_0 -> g_k emission, and the g_k -> g_{k-1} relaxation rate.
/// All values SI (rad/s and 1/s).
struct VibronicRow {
  double phonon_angular_frequency = 0.0;
  double free_decay_rate = 0.0;
  std::optional<double> vibronic_decay_rate;  // absent for k = 0
};

/// Ground-state vibronic ladder g_0..g_n of the NV centre.
///
/// Invariants (checked on construction): row 0 has zero phonon energy and no
/// vibronic decay, energies strictly increase, and every rate is positive.
class VibronicTable {
 public:
  explicit VibronicTable(std::vector<VibronicRow> rows);

  /// Room-temperature nanodiamond values (8 rows, n = 7).
  static VibronicTable defaults();

  /// Reads `k,energy_meV,gamma_f_MHz,gamma_vib_THz` rows; lines starting with
  /// '#' are comments, the vibronic column is empty for k = 0.
  static VibronicTable from_csv(const std::filesystem::path& path);

  int size() const { return static_cast<int>(rows_.size()); }
  /// Highest band index n.
  int max_band() const { return size() - 1; }
  const VibronicRow& row(int k) const;
  const std::vector<VibronicRow>& rows() const { return rows_; }

  double phonon_angular_frequency(int k) const { return row(k).phonon_angular_frequency; }
  double free_decay_rate(int k) const { return row(k).free_decay_rate; }
  /// g_k -> g_{k-1}; throws UsageError for k = 0.
  double vibronic_decay_rate(int k) const;

  /// Serialises back to the CSV layout accepted by from_csv.
  std::string to_csv() const;

 private:
  std::vector<VibronicRow> rows_;
};

/// Spin-manifold parameters of the triplet ground and excited states.
struct SpinParameters {
  double ground_zero_field = 2.87e9;    // D_gs, Hz
  double excited_zero_field = 1.42e9;   // D_es, Hz
  double axial_field = 0.0;             // B_NV, T
  double microwave_amplitude = 0.35e-3; // B_mu0, T
  double microwave_angular_frequency = 2.0 * 3.141592653589793 * 2.87e9;  // omega_mu, rad/s
  double ground_relaxation = 1.0 / 7.7e-3;   // Gamma_rel^g, 1/s
  double excited_relaxation = 1.0 / 1e-3;    // Gamma_rel^e, 1/s
  double ground_dephasing = 1.0 / 6.7e-6;    // Gamma_*^g, 1/s
  double excited_dephasing = 1.0 / 10e-9;    // Gamma_*^e, 1/s

  void validate() const;
};

/// Intersystem-crossing rates and singlet energies.
struct ISCParameters {
  double excited_pm1_to_singlet = 92e6;   // gamma_es+-1, 1/s
  double excited_0_to_singlet = 11.4e6;   // gamma_es0
  double singlet_to_ground_pm1 = 2.35e6;  // gamma_sg+-1
  double singlet_to_ground_0 = 4.84e6;    // gamma_sg0
  double singlet_decay = 1e9;             // gamma_s, s_1 -> s_0
  double singlet_gap = 0.0;               // Delta E_s between s_1 and s_0, J
  double excited_singlet_gap = 0.0;       // Delta E_es between e_0 and s_1, J

  static ISCParameters defaults();
  void validate() const;
};

/// Optical drive plus the optical constants of the emitter.
struct OpticalDrive {
  double photon_energy = 0.0;        // hbar omega_d, J
  double intensity = 0.0;            // W/m^2
  double zpl_energy = 0.0;           // hbar omega_z, J
  double optical_dephasing = 15e12;  // gamma_*, 1/s
  double excited_vibronic_decay = 1434e12;  // gamma_e, 1/s
  double base_dipole = 0.0;          // mu_0, C m
  double diamond_index = 2.4;        // n_D
  double background_index = 1.0;    // n_b

  static OpticalDrive defaults();
  void validate() const;

  double angular_frequency() const;
  double zpl_angular_frequency() const;
  /// Positive-frequency field amplitude E_0 in the background medium.
  double field_amplitude() const;
  /// epsilon_effD for this background and diamond index.
  double screening() const;
};

/// Everything that defines an isolated NV centre and its drives.
struct NVParameters {
  VibronicTable vibronic = VibronicTable::defaults();
  SpinParameters spin;
  ISCParameters isc = ISCParameters::defaults();
  OpticalDrive drive = OpticalDrive::defaults();

  void validate() const;
  int max_band() const { return vibronic.max_band(); }
};

/// mu_k = mu_0 sqrt(gamma^f_k / gamma^f_0), so that gamma^f_k scales as |mu_k|^2.
double dipole_moment(const VibronicTable& table, double base_dipole, int k);

struct ZeemanFrequencies {
  double ground_plus;    // omega_{g+1}
  double ground_minus;   // omega_{g-1}
  double excited_plus;   // omega_{e+1}
  double excited_minus;  // omega_{e-1}
};

/// Angular eigenfrequencies of |+-1> relative to |0> for an axial field.
ZeemanFrequencies zeeman_frequencies(const SpinParameters& spin);

/// E_0 = sqrt(I / (2 n_b eps_0 c)) for E = E_0 exp(-i w t) + c.c.
double field_amplitude_from_intensity(double intensity, double background_index);

/// epsilon_effD = (2 eps_b + eps_D) / (3 eps_b).
double screening_factor(double background_permittivity, double diamond_permittivity);

/// Spin Rabi frequency g mu_B B_mu0 / (hbar sqrt 2).
double spin_rabi_frequency(double microwave_amplitude);

}  // namespace nvps

#endif  // NVPS_PARAMETERS_HPP
