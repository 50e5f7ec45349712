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

#include "nvps/manifest.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>
#include <yaml-cpp/yaml.h>

#include "nvps/csv.hpp"
#include "nvps/errors.hpp"
#include "nvps/nv_model.hpp"
#include "nvps/runner.hpp"
#include "nvps/steady_state.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

ordered_json yaml_to_json(const YAML::Node& n) {
  switch (n.Type()) {
    case YAML::NodeType::Map: {
      ordered_json j = ordered_json::object();
      for (const auto& kv : n) j[kv.first.as<std::string>()] = yaml_to_json(kv.second);
      return j;
    }
    case YAML::NodeType::Sequence: {
      ordered_json j = ordered_json::array();
      for (const auto& item : n) j.push_back(yaml_to_json(item));
      return j;
    }
    case YAML::NodeType::Scalar: return n.Scalar();
    default: return nullptr;
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json table_entry(const std::string& role, const fs::path& path) {
  return {{"role", role}, {"path", path.string()}, {"sha256", sha256_file(path)}};
}

ordered_json constants() {
  return {{"planck_J_s", units::kPlanck},
          {"hbar_J_s", units::kHbar},
          {"elementary_charge_C", units::kElementaryCharge},
          {"bohr_magneton_J_per_T", units::kBohrMagneton},
          {"vacuum_permittivity_F_per_m", units::kVacuumPermittivity},
          {"speed_of_light_m_per_s", units::kSpeedOfLight},
          {"debye_C_m", units::kDebye},
          {"lande_g", units::kLandeG}};
}

ordered_json resolved_model(const RunConfig& config) {
  const NVModel model(config.setup());
  const OpticalDrive& d = model.setup().nv.drive;
  ordered_json j;
  j["hilbert_dim"] = model.scheme().dim();
  j["vibronic_bands"] = model.scheme().max_band() + 1;
  j["collapse_channel_count"] = model.channels().size();
  j["drive_energy_eV"] = units::joule_to_ev(d.photon_energy);
  j["background_index"] = d.background_index;
  j["field_amplitude_V_per_m"] = d.field_amplitude();
  j["screening"] = d.screening();
  j["rabi_scale"] = {model.coupling().rabi_scale.real(), model.coupling().rabi_scale.imag()};
  j["emission_rates_per_s"] = model.coupling().emission_rates;
  j["quantum_efficiency"] = model.coupling().quantum_efficiency;
  ordered_json channels = ordered_json::array();
  for (const auto& ch : model.channels()) {
    channels.push_back({{"label", ch.label}, {"kind", channel_kind_name(ch.kind)}, {"rate_per_s", ch.rate}});
  }
  j["collapse_channels"] = std::move(channels);
  return j;
}

ordered_json tolerances(const RunConfig& c) {
  const SteadyStateOptions ss;
  return {{"steady_state_residual_relative", ss.residual_tolerance},
          {"evolve_rtol", c.trace.evolve.rtol},
          {"evolve_atol", c.trace.evolve.atol},
          {"evolve_min_step_s", c.trace.evolve.min_step},
          {"stabilization_threshold", c.trace.stabilization_threshold},
          {"baseline_margin", c.fom.options.baseline_margin},
          {"dip_threshold", c.fom.options.dip_threshold}};
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string sha256_file(const fs::path& path) { return sha256_hex(read_file(path)); }

std::string build_manifest(Command command, const RunConfig& config, const fs::path& out_dir,
                           const std::vector<std::string>& outputs) {
  ordered_json m;
  m["nvps_version"] = NVPS_VERSION;
  m["command"] = command_name(command);
  m["config"] = yaml_to_json(YAML::Load(serialize_config(config)));
  m["constants"] = constants();

  ordered_json tables = ordered_json::array();
  if (config.vibronic_table.empty()) {
    tables.push_back({{"role", "vibronic"}, {"path", "built-in"},
                      {"sha256", sha256_hex(config.nv.vibronic.to_csv())}});
  } else {
    tables.push_back(table_entry("vibronic", config.vibronic_table));
  }
  if (auto p = config.material_path()) tables.push_back(table_entry("material", *p));
  auto resolve = [&](const fs::path& p) { return p.is_absolute() || config.base_dir.empty() ? p : config.base_dir / p; };
  if (command == Command::kFom) {
    if (!config.fom.curve.empty()) tables.push_back(table_entry("curve", resolve(config.fom.curve)));
    if (!config.fom.reference.empty()) tables.push_back(table_entry("reference", resolve(config.fom.reference)));
  }
  m["tables"] = std::move(tables);

  if (command != Command::kFom) m["model"] = resolved_model(config);
  m["tolerances"] = tolerances(config);

  ordered_json files = ordered_json::array();
  for (const auto& f : outputs) {
    files.push_back({{"file", f}, {"sha256", sha256_file(out_dir / f)}});
  }
  m["outputs"] = std::move(files);
  return m.dump(2) + "\n";
}

std::pair<Command, RunConfig> config_from_manifest(const fs::path& manifest) {
  ordered_json m;
  try {
    m = ordered_json::parse(read_file(manifest));
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError(manifest.string() + ": " + e.what());
  }
  if (!m.contains("command") || !m.contains("config")) throw ConfigError(manifest.string() + ": not an nvps manifest");
  const auto command = command_from_name(m["command"].get<std::string>());
  if (!command) throw ConfigError(manifest.string() + ": unknown command");
  // JSON is valid YAML, so the config block goes straight back to the parser.
  RunConfig c = parse_config_string(m["config"].dump(), manifest.string(), manifest.parent_path());
  c.source = manifest;
  return {*command, std::move(c)};
}

ReplayReport replay_manifest(const fs::path& manifest, const fs::path& work_dir, int threads) {
  const ordered_json m = ordered_json::parse(read_file(manifest));
  auto [command, config] = config_from_manifest(manifest);
  RunOptions options;
  options.out_dir = work_dir;
  options.threads = threads;
  run_experiment(command, config, options);

  ReplayReport report;
  for (const auto& entry : m["outputs"]) {
    const std::string file = entry["file"].get<std::string>();
    const fs::path produced = work_dir / file;
    if (!fs::exists(produced)) {
      report.missing.push_back(file);
    } else if (sha256_file(produced) == entry["sha256"].get<std::string>()) {
      report.matched.push_back(file);
    } else {
      report.mismatched.push_back(file);
    }
  }
  return report;
}

}  // namespace nvps
