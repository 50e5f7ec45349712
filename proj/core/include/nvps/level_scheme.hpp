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

#ifndef NVPS_LEVEL_SCHEME_HPP
#define NVPS_LEVEL_SCHEME_HPP

#include <array>
#include <optional>
#include <string>

namespace nvps {

class VibronicTable;

enum class Spin : int { kPlus = 1, kZero = 0, kMinus = -1 };

inline constexpr std::array<Spin, 3> kSpins = {Spin::kPlus, Spin::kZero, Spin::kMinus};

/// Position of a spin projection inside a triplet block (+1, 0, -1 order).
constexpr int spin_slot(Spin s) { return 1 - static_cast<int>(s); }

enum class LevelKind { kGround, kExcited, kSinglet };

/// Orbital (or singlet) level label: g_k, e_j (j = 0, 1) or s_1 / s_0.
struct Level {
  LevelKind kind;
  int number;

  static constexpr Level ground(int k) { return {LevelKind::kGround, k}; }
  static constexpr Level excited(int j) { return {LevelKind::kExcited, j}; }
  /// s_1, the short-lived upper singlet.
  static constexpr Level upper_singlet() { return {LevelKind::kSinglet, 1}; }
  /// s_0, the metastable lower singlet.
  static constexpr Level lower_singlet() { return {LevelKind::kSinglet, 0}; }

  bool is_triplet() const { return kind != LevelKind::kSinglet; }
  std::string name() const;
  friend bool operator==(const Level&, const Level&) = default;
};

struct BasisState {
  Level level;
  std::optional<Spin> spin;
  friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Composite Hilbert space (n+3 orbital levels x 3 spins) (+) 2 singlets.
///
/// Ordering is orbital-major and spin-minor: g_0(+1,0,-1), ..., g_n(...),
/// e_0(...), e_1(...), then s_1 and s_0. Each orbital's spin triplet is
/// therefore a contiguous block of three indices.
class LevelScheme {
 public:
  /// Throws ConfigError unless the table has exactly n+1 rows.
  static LevelScheme build(int n, const VibronicTable& table);

  explicit LevelScheme(int n);

  int max_band() const { return n_; }
  int dim() const { return 3 * (n_ + 3) + 2; }
  int orbital_count() const { return n_ + 3; }

  /// Throws UsageError when a spin is given for a singlet or missing for a
  /// triplet level, RangeError when the label does not exist.
  int index(Level level, std::optional<Spin> spin = std::nullopt) const;
  BasisState state(int index) const;

  int ground(int k, Spin s) const { return index(Level::ground(k), s); }
  int excited(int j, Spin s) const { return index(Level::excited(j), s); }
  int upper_singlet() const { return 3 * (n_ + 3); }
  int lower_singlet() const { return 3 * (n_ + 3) + 1; }

  /// Orbital slot of a triplet level (g_k -> k, e_j -> n+1+j).
  int orbital_slot(Level level) const;

 private:
  int n_;
};

}  // namespace nvps

#endif  // NVPS_LEVEL_SCHEME_HPP
