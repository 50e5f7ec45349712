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

#include "nvps/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "nvps/errors.hpp"
#include "nvps/plasmonics.hpp"
#include "nvps/units.hpp"

namespace nvps {

namespace fs = std::filesystem;

namespace {

struct Unit {
  const char* name;
  double factor;
  bool reciprocal = false;  // lifetime given for a rate
};

const std::vector<Unit>& units_for(Dimension d) {
  static const std::map<Dimension, std::vector<Unit>> table = {
      {Dimension::kFrequency, {{"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}, {"THz", 1e12}}},
      {Dimension::kAngularFrequency,
       {{"rad/s", 1.0}, {"Hz", 2.0 * units::kPi}, {"kHz", 2e3 * units::kPi}, {"MHz", 2e6 * units::kPi},
        {"GHz", 2e9 * units::kPi}}},
      {Dimension::kRate,
       {{"/s", 1.0}, {"1/s", 1.0}, {"/ms", 1e3}, {"/us", 1e6}, {"/ns", 1e9}, {"Hz", 1.0}, {"kHz", 1e3},
        {"MHz", 1e6}, {"GHz", 1e9}, {"THz", 1e12}, {"s", 1.0, true}, {"ms", 1e-3, true},
        {"us", 1e-6, true}, {"ns", 1e-9, true}, {"ps", 1e-12, true}, {"fs", 1e-15, true}}},
      {Dimension::kEnergy, {{"J", 1.0}, {"eV", units::kElementaryCharge}, {"meV", 1e-3 * units::kElementaryCharge}}},
      {Dimension::kMagneticField, {{"T", 1.0}, {"mT", 1e-3}, {"uT", 1e-6}, {"G", 1e-4}}},
      {Dimension::kIntensity,
       {{"W/m^2", 1.0}, {"mW/um^2", 1e9}, {"uW/um^2", 1e6}, {"W/cm^2", 1e4}, {"kW/cm^2", 1e7},
        {"MW/cm^2", 1e10}}},
      {Dimension::kLength, {{"m", 1.0}, {"um", 1e-6}, {"nm", 1e-9}}},
      {Dimension::kDipole, {{"C*m", 1.0}, {"D", units::kDebye}}},
      {Dimension::kAngle, {{"rad", 1.0}, {"deg", units::kPi / 180.0}}},
      {Dimension::kTime, {{"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9}}},
      {Dimension::kDimensionless, {}},
  };
  return table.at(d);
}

const char* canonical_unit(Dimension d) {
  switch (d) {
    case Dimension::kFrequency: return "Hz";
    case Dimension::kAngularFrequency: return "rad/s";
    case Dimension::kRate: return "/s";
    case Dimension::kEnergy: return "J";
    case Dimension::kMagneticField: return "T";
    case Dimension::kIntensity: return "W/m^2";
    case Dimension::kLength: return "m";
    case Dimension::kDipole: return "C*m";
    case Dimension::kAngle: return "rad";
    case Dimension::kTime: return "s";
    case Dimension::kDimensionless: return "";
  }
  return "";
}

std::string normalise_unit(std::string u) {
  for (const std::string micro : {"\xC2\xB5", "\xCE\xBC"}) {  // micro sign, greek mu
    for (auto pos = u.find(micro); pos != std::string::npos; pos = u.find(micro)) u.replace(pos, micro.size(), "u");
  }
  u.erase(std::remove(u.begin(), u.end(), ' '), u.end());
  if (u == "Cm" || u == "C.m") u = "C*m";
  if (u == "s^-1") u = "/s";
  return u;
}

std::string format_number(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

enum class Bound { kAny, kNonNegative, kPositive };

// Typed access to one YAML mapping; remembers which keys were read so that
// the leftovers can be reported as unknown.
class Section {
 public:
  Section(const YAML::Node& node, std::string path, const std::string& file)
      : node_(node), path_(std::move(path)), file_(file) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) fail(node_, "'" + path_ + "' must be a mapping");
  }

  [[noreturn]] void fail(const YAML::Node& at, const std::string& what) const {
    throw ParseError(file_, at.Mark().line + 1, what);
  }

  bool has(const char* key) const { return node_ && node_.IsMap() && node_[key]; }

  std::optional<YAML::Node> take(const char* key) {
    used_.insert(key);
    if (!has(key)) return std::nullopt;
    return node_[key];
  }

  std::string name(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

  void quantity(const char* key, Dimension dim, double& out, Bound bound = Bound::kNonNegative) {
    const auto found = take(key);
    if (!found) return;
    const YAML::Node& n = *found;
    if (!n.IsScalar()) fail(n, name(key) + " must be a scalar");
    double v = 0.0;
    try {
      v = parse_quantity(n.Scalar(), dim);
    } catch (const ConfigError& e) {
      fail(n, name(key) + ": " + e.what());
    }
    check(n, key, v, bound);
    out = v;
  }

  void integer(const char* key, int& out, int min) {
    const auto found = take(key);
    if (!found) return;
    const YAML::Node& n = *found;
    int v = 0;
    try {
      v = n.as<int>();
    } catch (const YAML::Exception&) {
      fail(n, name(key) + " must be an integer");
    }
    if (v < min) fail(n, name(key) + " must be >= " + std::to_string(min));
    out = v;
  }

  void boolean(const char* key, bool& out) {
    const auto found = take(key);
    if (!found) return;
    const YAML::Node& n = *found;
    try {
      out = n.as<bool>();
    } catch (const YAML::Exception&) {
      fail(n, name(key) + " must be true or false");
    }
  }

  std::optional<std::string> text(const char* key) {
    const auto found = take(key);
    if (!found) return std::nullopt;
    const YAML::Node& n = *found;
    if (!n.IsScalar()) fail(n, name(key) + " must be a scalar");
    return n.Scalar();
  }

  template <class T>
  void choice(const char* key, T& out, const std::map<std::string, T>& options) {
    const auto found = take(key);
    if (!found) return;
    const YAML::Node& n = *found;
    const auto it = n.IsScalar() ? options.find(n.Scalar()) : options.end();
    if (it == options.end()) {
      std::string allowed;
      for (const auto& [k, v] : options) allowed += (allowed.empty() ? "" : ", ") + k;
      fail(n, name(key) + " must be one of: " + allowed);
    }
    out = it->second;
  }

  void check(const YAML::Node& at, const char* key, double v, Bound bound) const {
    if (!std::isfinite(v)) fail(at, name(key) + " must be finite");
    if (bound == Bound::kNonNegative && v < 0.0) fail(at, name(key) + " must be >= 0");
    if (bound == Bound::kPositive && !(v > 0.0)) fail(at, name(key) + " must be > 0");
  }

  Section child(const char* key) {
    const auto n = take(key);
    return Section(n ? *n : YAML::Node(), name(key), file_);
  }

  void finish() const {
    if (!node_ || !node_.IsMap()) return;
    for (const auto& kv : node_) {
      const std::string key = kv.first.as<std::string>();
      if (!used_.contains(key)) fail(kv.first, "unknown key '" + name(key.c_str()) + "'");
    }
  }

 private:
  YAML::Node node_;
  std::string path_;
  const std::string& file_;
  std::set<std::string> used_;
};

fs::path resolve_file(const std::string& ref, const fs::path& base_dir) {
  const fs::path p(ref);
  if (p.is_absolute()) return p;
  if (!base_dir.empty() && fs::exists(base_dir / p)) return base_dir / p;
  return data_directory() / p;
}

void read_spin(Section s, SpinParameters& p) {
  s.quantity("ground_zero_field", Dimension::kFrequency, p.ground_zero_field, Bound::kPositive);
  s.quantity("excited_zero_field", Dimension::kFrequency, p.excited_zero_field, Bound::kPositive);
  s.quantity("axial_field", Dimension::kMagneticField, p.axial_field, Bound::kAny);
  s.quantity("microwave_amplitude", Dimension::kMagneticField, p.microwave_amplitude);
  s.quantity("microwave_frequency", Dimension::kAngularFrequency, p.microwave_angular_frequency);
  s.quantity("ground_relaxation", Dimension::kRate, p.ground_relaxation);
  s.quantity("excited_relaxation", Dimension::kRate, p.excited_relaxation);
  s.quantity("ground_dephasing", Dimension::kRate, p.ground_dephasing);
  s.quantity("excited_dephasing", Dimension::kRate, p.excited_dephasing);
  s.finish();
}

void read_isc(Section s, ISCParameters& p) {
  s.quantity("excited_pm1_to_singlet", Dimension::kRate, p.excited_pm1_to_singlet);
  s.quantity("excited_0_to_singlet", Dimension::kRate, p.excited_0_to_singlet);
  s.quantity("singlet_to_ground_pm1", Dimension::kRate, p.singlet_to_ground_pm1);
  s.quantity("singlet_to_ground_0", Dimension::kRate, p.singlet_to_ground_0);
  s.quantity("singlet_decay", Dimension::kRate, p.singlet_decay);
  s.quantity("singlet_gap", Dimension::kEnergy, p.singlet_gap);
  s.quantity("excited_singlet_gap", Dimension::kEnergy, p.excited_singlet_gap);
  s.finish();
}

void read_optics(Section s, RunConfig& c) {
  OpticalDrive& d = c.nv.drive;
  if (s.has("drive_energy")) {
    const YAML::Node n = *s.take("drive_energy");
    if (n.IsScalar() && n.Scalar() == "plasmon_peak") {
      c.drive_at_plasmon_peak = true;
    } else {
      c.drive_at_plasmon_peak = false;
      double v = 0.0;
      try {
        v = parse_quantity(n.IsScalar() ? n.Scalar() : std::string(), Dimension::kEnergy);
      } catch (const ConfigError& e) {
        s.fail(n, s.name("drive_energy") + ": " + e.what() + " (or 'plasmon_peak')");
      }
      s.check(n, "drive_energy", v, Bound::kPositive);
      d.photon_energy = v;
    }
  }
  if (s.has("background_index")) c.background_index_set = true;
  s.quantity("intensity", Dimension::kIntensity, d.intensity);
  s.quantity("zpl_energy", Dimension::kEnergy, d.zpl_energy, Bound::kPositive);
  s.quantity("optical_dephasing", Dimension::kRate, d.optical_dephasing);
  s.quantity("excited_vibronic_decay", Dimension::kRate, d.excited_vibronic_decay, Bound::kPositive);
  s.quantity("dipole_moment", Dimension::kDipole, d.base_dipole, Bound::kPositive);
  s.quantity("diamond_index", Dimension::kDimensionless, d.diamond_index, Bound::kPositive);
  s.quantity("background_index", Dimension::kDimensionless, d.background_index, Bound::kPositive);
  s.boolean("ground_only_drive", c.hamiltonian.ground_only_drive);
  s.finish();
}

PlasmonicsSpec read_plasmonics(Section s) {
  PlasmonicsSpec p;
  if (auto m = s.text("material")) p.material.source = *m;
  s.choice<plasmonics::Interpolation>("interpolation", p.material.interpolation,
                                      {{"linear", plasmonics::Interpolation::kLinear},
                                       {"pchip", plasmonics::Interpolation::kPchip}});
  s.quantity("radius", Dimension::kLength, p.radius, Bound::kPositive);
  s.quantity("separation", Dimension::kLength, p.separation, Bound::kPositive);
  s.quantity("background_permittivity", Dimension::kDimensionless, p.background_permittivity, Bound::kPositive);
  enum class Mode { kRadial, kTangential, kAngle } mode = Mode::kRadial;
  s.choice<Mode>("orientation", mode,
                 {{"radial", Mode::kRadial}, {"tangential", Mode::kTangential}, {"angle", Mode::kAngle}});
  p.orientation = mode == Mode::kTangential ? plasmonics::Orientation::kTangential
                                            : plasmonics::Orientation::kRadial;
  plasmonics::AngleMode angle;
  s.quantity("theta", Dimension::kAngle, angle.theta, Bound::kAny);
  s.quantity("nv_axis_angle", Dimension::kAngle, angle.nv_axis_angle, Bound::kAny);
  if (mode == Mode::kAngle) p.angle = angle;
  s.boolean("nonlinear_rabi", p.nonlinear_rabi);
  s.finish();
  return p;
}

void read_experiment_blocks(Section& root, RunConfig& c) {
  {
    Section s = root.child("odmr");
    s.quantity("start", Dimension::kFrequency, c.odmr.start, Bound::kPositive);
    s.quantity("stop", Dimension::kFrequency, c.odmr.stop, Bound::kPositive);
    s.integer("points", c.odmr.points, 3);
    s.finish();
  }
  {
    Section s = root.child("trace");
    s.quantity("window", Dimension::kTime, c.trace.window, Bound::kPositive);
    s.integer("samples", c.trace.samples, 2);
    s.quantity("stabilization_threshold", Dimension::kDimensionless, c.trace.stabilization_threshold,
               Bound::kPositive);
    s.quantity("rtol", Dimension::kDimensionless, c.trace.evolve.rtol, Bound::kPositive);
    s.quantity("atol", Dimension::kDimensionless, c.trace.evolve.atol, Bound::kPositive);
    s.finish();
  }
  {
    Section s = root.child("spectrum");
    s.quantity("start", Dimension::kEnergy, c.spectrum.start, Bound::kPositive);
    s.quantity("stop", Dimension::kEnergy, c.spectrum.stop, Bound::kPositive);
    s.integer("points", c.spectrum.points, 2);
    s.choice<FieldZone>("zone", c.spectrum.zone, {{"far", FieldZone::kFar}, {"near", FieldZone::kNear}});
    s.quantity("scale", Dimension::kDimensionless, c.spectrum.scale, Bound::kPositive);
    s.quantity("zpl_half_window", Dimension::kEnergy, c.spectrum.zpl_half_window, Bound::kPositive);
    s.integer("zpl_points", c.spectrum.zpl_points, 3);
    s.quantity("far_field_scale", Dimension::kDimensionless, c.spectrum.far_field_scale, Bound::kPositive);
    s.integer("theta_points", c.spectrum.theta_points, 0);
    s.finish();
  }
  {
    Section s = root.child("sweep");
    if (const auto found = s.take("intensities")) {
      const YAML::Node& list = *found;
      if (!list.IsSequence() || list.size() == 0) s.fail(list, "sweep.intensities must be a non-empty list");
      c.sweep.intensities.clear();
      for (const auto& item : list) {
        double v = 0.0;
        try {
          v = parse_quantity(item.IsScalar() ? item.Scalar() : std::string(), Dimension::kIntensity);
        } catch (const ConfigError& e) {
          s.fail(item, std::string("sweep.intensities: ") + e.what());
        }
        s.check(item, "intensities", v, Bound::kPositive);
        c.sweep.intensities.push_back(v);
      }
    }
    s.finish();
  }
  {
    Section s = root.child("fom");
    if (auto p = s.text("curve")) c.fom.curve = *p;
    if (auto p = s.text("reference")) c.fom.reference = *p;
    s.quantity("baseline_margin", Dimension::kDimensionless, c.fom.options.baseline_margin, Bound::kPositive);
    s.quantity("dip_threshold", Dimension::kDimensionless, c.fom.options.dip_threshold, Bound::kPositive);
    s.finish();
  }
}

RunConfig parse_node(const YAML::Node& doc, const std::string& file, const fs::path& base_dir) {
  RunConfig c;
  c.base_dir = base_dir;
  Section root(doc, "", file);
  if (auto e = root.text("experiment")) {
    c.experiment = command_from_name(*e);
    if (!c.experiment) root.fail(doc["experiment"], "unknown experiment '" + *e + "'");
  }
  if (auto o = root.text("output")) c.output_dir = *o;
  root.boolean("reference", c.reference);
  if (auto v = root.text("vibronic_table")) {
    c.vibronic_table = resolve_file(*v, base_dir);
    try {
      c.nv.vibronic = VibronicTable::from_csv(c.vibronic_table);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      root.fail(doc["vibronic_table"], e.what());
    }
  }
  read_spin(root.child("spin"), c.nv.spin);
  read_isc(root.child("isc"), c.nv.isc);
  read_optics(root.child("optics"), c);
  if (root.has("plasmonics")) {
    const YAML::Node n = doc["plasmonics"];
    Section s = root.child("plasmonics");
    if (!n.IsNull()) c.plasmonics = read_plasmonics(std::move(s));
  }
  read_experiment_blocks(root, c);
  root.finish();
  if (c.drive_at_plasmon_peak && !c.plasmonics) {
    root.fail(doc["optics"]["drive_energy"], "drive_energy: plasmon_peak needs a plasmonics block");
  }
  if (c.odmr.stop <= c.odmr.start) root.fail(doc["odmr"], "odmr.stop must exceed odmr.start");
  if (c.spectrum.stop <= c.spectrum.start) root.fail(doc["spectrum"], "spectrum.stop must exceed spectrum.start");
  return c;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::kOdmr: return "odmr";
    case Command::kTrace: return "trace";
    case Command::kSpectrum: return "spectrum";
    case Command::kSweep: return "sweep";
    case Command::kFom: return "fom";
  }
  return "";
}

std::optional<Command> command_from_name(const std::string& name) {
  for (Command c : {Command::kOdmr, Command::kTrace, Command::kSpectrum, Command::kSweep, Command::kFom}) {
    if (name == command_name(c)) return c;
  }
  return std::nullopt;
}

double parse_quantity(const std::string& text, Dimension dimension) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  if (begin < end && *begin == '+') ++begin;
  double value = 0.0;
  const auto r = std::from_chars(begin, end, value);
  if (r.ec != std::errc()) throw ConfigError("'" + text + "' is not a number");
  const std::string unit = normalise_unit(std::string(r.ptr, end));
  const auto& allowed = units_for(dimension);
  if (dimension == Dimension::kDimensionless) {
    if (!unit.empty()) throw ConfigError("'" + text + "' must be a plain number");
    return value;
  }
  std::string names;
  for (const Unit& u : allowed) {
    if (unit == u.name) return u.reciprocal ? 1.0 / (value * u.factor) : value * u.factor;
    names += (names.empty() ? "" : ", ") + std::string(u.name);
  }
  if (unit.empty()) throw ConfigError("'" + text + "' is missing a unit (one of " + names + ")");
  throw ConfigError("unit '" + unit + "' not accepted here (one of " + names + ")");
}

std::string format_quantity(double value, Dimension dimension) {
  const std::string n = format_number(value);
  return dimension == Dimension::kDimensionless ? n : n + " " + canonical_unit(dimension);
}

fs::path data_directory() {
  if (const char* env = std::getenv("NVPS_DATA_DIR"); env && *env) return env;
  if (fs::exists(NVPS_SOURCE_DATA_DIR)) return NVPS_SOURCE_DATA_DIR;
  return NVPS_DEFAULT_DATA_DIR;
}

RunConfig parse_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  RunConfig c = parse_config_string(buf.str(), path.string(), path.parent_path());
  c.source = path;
  return c;
}

RunConfig parse_config_string(const std::string& text, const std::string& name, const fs::path& base_dir) {
  YAML::Node doc;
  try {
    doc = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(name, e.mark.line + 1, e.msg);
  }
  if (doc.IsNull()) doc = YAML::Node(YAML::NodeType::Map);
  if (!doc.IsMap()) throw ParseError(name, doc.Mark().line + 1, "config must be a mapping");
  try {
    return parse_node(doc, name, base_dir);
  } catch (const YAML::Exception& e) {
    throw ParseError(name, e.mark.line + 1, e.msg);
  }
}

std::optional<fs::path> RunConfig::material_path() const {
  if (!plasmonics) return std::nullopt;
  const std::string& src = plasmonics->material.source;
  if (src == "silver") return data_directory() / "silver_johnson_christy.csv";
  if (src == "gold") return data_directory() / "gold_johnson_christy.csv";
  return resolve_file(src, base_dir);
}

NVSetup RunConfig::setup() const {
  NVSetup s;
  s.nv = nv;
  s.hamiltonian = hamiltonian;
  if (plasmonics) {
    const fs::path path = *material_path();
    PlasmonicEnvironment env;
    env.particle.material = std::make_shared<const plasmonics::MaterialTable>(
        plasmonics::MaterialTable::from_csv(path, plasmonics->material.source, plasmonics->material.interpolation));
    env.particle.radius = plasmonics->radius;
    env.particle.background_permittivity = plasmonics->background_permittivity;
    env.geometry.separation = plasmonics->separation;
    env.geometry.orientation = plasmonics->orientation;
    env.angle = plasmonics->angle;
    env.nonlinear_rabi = plasmonics->nonlinear_rabi;
    env.validate();
    if (!background_index_set) s.nv.drive.background_index = env.particle.background_index();
    if (drive_at_plasmon_peak) {
      s.nv.drive.photon_energy = units::ev_to_joule(plasmonics::plasmon_peak_energy(env.particle));
    }
    s.plasmonics = std::move(env);
  } else if (!background_index_set) {
    s.nv.drive.background_index = 1.0;
  }
  s.validate();
  return s;
}

std::string serialize_config(const RunConfig& c) {
  YAML::Emitter out;
  auto q = [&](const char* key, double v, Dimension d) { out << YAML::Key << key << YAML::Value << format_quantity(v, d); };
  out << YAML::BeginMap;
  if (c.experiment) out << YAML::Key << "experiment" << YAML::Value << command_name(*c.experiment);
  out << YAML::Key << "output" << YAML::Value << c.output_dir.string();
  out << YAML::Key << "reference" << YAML::Value << c.reference;
  if (!c.vibronic_table.empty()) out << YAML::Key << "vibronic_table" << YAML::Value << c.vibronic_table.string();

  const SpinParameters& sp = c.nv.spin;
  out << YAML::Key << "spin" << YAML::Value << YAML::BeginMap;
  q("ground_zero_field", sp.ground_zero_field, Dimension::kFrequency);
  q("excited_zero_field", sp.excited_zero_field, Dimension::kFrequency);
  q("axial_field", sp.axial_field, Dimension::kMagneticField);
  q("microwave_amplitude", sp.microwave_amplitude, Dimension::kMagneticField);
  q("microwave_frequency", sp.microwave_angular_frequency, Dimension::kAngularFrequency);
  q("ground_relaxation", sp.ground_relaxation, Dimension::kRate);
  q("excited_relaxation", sp.excited_relaxation, Dimension::kRate);
  q("ground_dephasing", sp.ground_dephasing, Dimension::kRate);
  q("excited_dephasing", sp.excited_dephasing, Dimension::kRate);
  out << YAML::EndMap;

  const ISCParameters& isc = c.nv.isc;
  out << YAML::Key << "isc" << YAML::Value << YAML::BeginMap;
  q("excited_pm1_to_singlet", isc.excited_pm1_to_singlet, Dimension::kRate);
  q("excited_0_to_singlet", isc.excited_0_to_singlet, Dimension::kRate);
  q("singlet_to_ground_pm1", isc.singlet_to_ground_pm1, Dimension::kRate);
  q("singlet_to_ground_0", isc.singlet_to_ground_0, Dimension::kRate);
  q("singlet_decay", isc.singlet_decay, Dimension::kRate);
  q("singlet_gap", isc.singlet_gap, Dimension::kEnergy);
  q("excited_singlet_gap", isc.excited_singlet_gap, Dimension::kEnergy);
  out << YAML::EndMap;

  const OpticalDrive& d = c.nv.drive;
  out << YAML::Key << "optics" << YAML::Value << YAML::BeginMap;
  if (c.drive_at_plasmon_peak) {
    out << YAML::Key << "drive_energy" << YAML::Value << "plasmon_peak";
  } else {
    q("drive_energy", d.photon_energy, Dimension::kEnergy);
  }
  q("intensity", d.intensity, Dimension::kIntensity);
  q("zpl_energy", d.zpl_energy, Dimension::kEnergy);
  q("optical_dephasing", d.optical_dephasing, Dimension::kRate);
  q("excited_vibronic_decay", d.excited_vibronic_decay, Dimension::kRate);
  q("dipole_moment", d.base_dipole, Dimension::kDipole);
  q("diamond_index", d.diamond_index, Dimension::kDimensionless);
  if (c.background_index_set) q("background_index", d.background_index, Dimension::kDimensionless);
  out << YAML::Key << "ground_only_drive" << YAML::Value << c.hamiltonian.ground_only_drive;
  out << YAML::EndMap;

  if (c.plasmonics) {
    const PlasmonicsSpec& p = *c.plasmonics;
    out << YAML::Key << "plasmonics" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "material" << YAML::Value << p.material.source;
    out << YAML::Key << "interpolation" << YAML::Value
        << (p.material.interpolation == plasmonics::Interpolation::kPchip ? "pchip" : "linear");
    q("radius", p.radius, Dimension::kLength);
    q("separation", p.separation, Dimension::kLength);
    q("background_permittivity", p.background_permittivity, Dimension::kDimensionless);
    out << YAML::Key << "orientation" << YAML::Value
        << (p.angle ? "angle" : p.orientation == plasmonics::Orientation::kRadial ? "radial" : "tangential");
    if (p.angle) {
      q("theta", p.angle->theta, Dimension::kAngle);
      q("nv_axis_angle", p.angle->nv_axis_angle, Dimension::kAngle);
    }
    out << YAML::Key << "nonlinear_rabi" << YAML::Value << p.nonlinear_rabi;
    out << YAML::EndMap;
  }

  out << YAML::Key << "odmr" << YAML::Value << YAML::BeginMap;
  q("start", c.odmr.start, Dimension::kFrequency);
  q("stop", c.odmr.stop, Dimension::kFrequency);
  out << YAML::Key << "points" << YAML::Value << c.odmr.points;
  out << YAML::EndMap;

  out << YAML::Key << "trace" << YAML::Value << YAML::BeginMap;
  q("window", c.trace.window, Dimension::kTime);
  out << YAML::Key << "samples" << YAML::Value << c.trace.samples;
  q("stabilization_threshold", c.trace.stabilization_threshold, Dimension::kDimensionless);
  q("rtol", c.trace.evolve.rtol, Dimension::kDimensionless);
  q("atol", c.trace.evolve.atol, Dimension::kDimensionless);
  out << YAML::EndMap;

  out << YAML::Key << "spectrum" << YAML::Value << YAML::BeginMap;
  q("start", c.spectrum.start, Dimension::kEnergy);
  q("stop", c.spectrum.stop, Dimension::kEnergy);
  out << YAML::Key << "points" << YAML::Value << c.spectrum.points;
  out << YAML::Key << "zone" << YAML::Value << (c.spectrum.zone == FieldZone::kFar ? "far" : "near");
  q("scale", c.spectrum.scale, Dimension::kDimensionless);
  q("zpl_half_window", c.spectrum.zpl_half_window, Dimension::kEnergy);
  out << YAML::Key << "zpl_points" << YAML::Value << c.spectrum.zpl_points;
  q("far_field_scale", c.spectrum.far_field_scale, Dimension::kDimensionless);
  out << YAML::Key << "theta_points" << YAML::Value << c.spectrum.theta_points;
  out << YAML::EndMap;

  out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "intensities" << YAML::Value << YAML::BeginSeq;
  for (double i : c.sweep.intensities) out << format_quantity(i, Dimension::kIntensity);
  out << YAML::EndSeq << YAML::EndMap;

  out << YAML::Key << "fom" << YAML::Value << YAML::BeginMap;
  if (!c.fom.curve.empty()) out << YAML::Key << "curve" << YAML::Value << c.fom.curve.string();
  if (!c.fom.reference.empty()) out << YAML::Key << "reference" << YAML::Value << c.fom.reference.string();
  q("baseline_margin", c.fom.options.baseline_margin, Dimension::kDimensionless);
  q("dip_threshold", c.fom.options.dip_threshold, Dimension::kDimensionless);
  out << YAML::EndMap;

  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace nvps
