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

#include "nvps/level_scheme.hpp"

#include "nvps/errors.hpp"
#include "nvps/parameters.hpp"

namespace nvps {

std::string Level::name() const {
  switch (kind) {
    case LevelKind::kGround: return "g" + std::to_string(number);
    case LevelKind::kExcited: return "e" + std::to_string(number);
    case LevelKind::kSinglet: return "s" + std::to_string(number);
  }
  return "?";
}

LevelScheme LevelScheme::build(int n, const VibronicTable& table) {
  if (n < 0) throw ConfigError("number of excited ground vibronic levels must be >= 0");
  if (table.size() != n + 1) {
    throw ConfigError("vibronic table has " + std::to_string(table.size()) + " rows, expected " +
                      std::to_string(n + 1));
  }
  return LevelScheme(n);
}

LevelScheme::LevelScheme(int n) : n_(n) {
  if (n < 0) throw ConfigError("number of excited ground vibronic levels must be >= 0");
}

int LevelScheme::orbital_slot(Level level) const {
  switch (level.kind) {
    case LevelKind::kGround:
      if (level.number < 0 || level.number > n_) {
        throw RangeError("no ground level g" + std::to_string(level.number));
      }
      return level.number;
    case LevelKind::kExcited:
      if (level.number < 0 || level.number > 1) {
        throw RangeError("no excited level e" + std::to_string(level.number));
      }
      return n_ + 1 + level.number;
    case LevelKind::kSinglet:
      throw UsageError("singlets have no orbital slot");
  }
  throw UsageError("unknown level kind");
}

int LevelScheme::index(Level level, std::optional<Spin> spin) const {
  if (level.kind == LevelKind::kSinglet) {
    if (spin) throw UsageError("singlet level " + level.name() + " takes no spin label");
    if (level.number == 1) return upper_singlet();
    if (level.number == 0) return lower_singlet();
    throw RangeError("no singlet level " + level.name());
  }
  if (!spin) throw UsageError("triplet level " + level.name() + " needs a spin label");
  return 3 * orbital_slot(level) + spin_slot(*spin);
}

BasisState LevelScheme::state(int index) const {
  if (index < 0 || index >= dim()) {
    throw RangeError("basis index " + std::to_string(index) + " outside 0.." + std::to_string(dim() - 1));
  }
  if (index == upper_singlet()) return {Level::upper_singlet(), std::nullopt};
  if (index == lower_singlet()) return {Level::lower_singlet(), std::nullopt};
  const int slot = index / 3;
  const Spin spin = kSpins[static_cast<std::size_t>(index % 3)];
  const Level level = slot <= n_ ? Level::ground(slot) : Level::excited(slot - n_ - 1);
  return {level, spin};
}

}  // namespace nvps
