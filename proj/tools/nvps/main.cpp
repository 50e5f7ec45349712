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

// nvps: command-line front end for the NV / plasmonics simulations.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nvps/config.hpp"
#include "nvps/csv.hpp"
#include "nvps/errors.hpp"
#include "nvps/manifest.hpp"
#include "nvps/nv_model.hpp"
#include "nvps/runner.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kConfigFailure = 2;
constexpr int kSolverFailure = 3;
constexpr int kReplayMismatch = 4;

struct Args {
  std::string config;
  std::string out;
  int threads = 1;
  bool plot = false;
  bool dump = false;
  std::string curve;
  std::string reference;
  std::string manifest;
};

// One JSON line on stderr per failure.
int report(const char* kind, const std::exception& e, int code, const nvps::ParseError* parse = nullptr) {
  nlohmann::ordered_json j{{"error", kind}, {"message", e.what()}, {"exit_code", code}};
  if (parse) {
    j["file"] = parse->file();
    j["line"] = parse->line();
  }
  std::cerr << j.dump() << '\n';
  return code;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const nvps::ParseError& e) {
    return report("parse", e, kConfigFailure, &e);
  } catch (const nvps::ConfigError& e) {
    return report("config", e, kConfigFailure);
  } catch (const nvps::UsageError& e) {
    return report("config", e, kConfigFailure);
  } catch (const nvps::RangeError& e) {
    return report("config", e, kConfigFailure);
  } catch (const nvps::DomainError& e) {
    return report("config", e, kConfigFailure);
  } catch (const nvps::SolverError& e) {
    return report("solver", e, kSolverFailure);
  } catch (const nvps::NumericError& e) {
    return report("solver", e, kSolverFailure);
  } catch (const nvps::ModelConsistencyError& e) {
    return report("solver", e, kSolverFailure);
  } catch (const std::exception& e) {
    return report("internal", e, 1);
  }
}

// Debug output: H, the channel list and the sparse Liouvillian at the setup's microwave frequency.
void dump_matrices(const nvps::RunConfig& config, const std::filesystem::path& dir) {
  const nvps::NVModel model(config.setup());
  const double w = model.setup().nv.spin.microwave_angular_frequency;
  const Eigen::MatrixXcd h = model.hamiltonian(w);
  nvps::CsvTable ht{{"hamiltonian / hbar in rad/s"}, {"row", "col", "re", "im"}, {}};
  for (Eigen::Index c = 0; c < h.cols(); ++c) {
    for (Eigen::Index r = 0; r < h.rows(); ++r) {
      if (h(r, c) != 0.0) {
        ht.rows.push_back({double(r), double(c), h(r, c).real(), h(r, c).imag()});
      }
    }
  }
  const nvps::Liouvillian l = model.liouvillian(w);
  nvps::CsvTable lt{{"liouvillian in 1/s, column-stacked vec"}, {"row", "col", "re", "im"}, {}};
  for (Eigen::Index c = 0; c < l.matrix().outerSize(); ++c) {
    for (nvps::SparseMatrix::InnerIterator it(l.matrix(), c); it; ++it) {
      lt.rows.push_back({double(it.row()), double(it.col()), it.value().real(), it.value().imag()});
    }
  }
  std::string channels = "index,kind,label,band,rate_per_s\n";
  for (std::size_t i = 0; i < model.channels().size(); ++i) {
    const auto& ch = model.channels()[i];
    channels += std::to_string(i) + "," + nvps::channel_kind_name(ch.kind) + ",\"" + ch.label + "\"," +
                std::to_string(ch.band) + "," + nvps::format_double(ch.rate) + "\n";
  }
  nvps::write_file_atomic(dir / "debug_channels.csv", channels);
  nvps::write_file_atomic(dir / "debug_hamiltonian.csv", nvps::format_csv(ht));
  nvps::write_file_atomic(dir / "debug_liouvillian.csv", nvps::format_csv(lt));
  std::cerr << "nvps: debug matrices written to " << dir.string() << '\n';
}

int run(nvps::Command command, const Args& a) {
  nvps::RunConfig config = a.config.empty() ? nvps::parse_config_string("") : nvps::parse_config(a.config);
  if (!a.curve.empty()) config.fom.curve = std::filesystem::absolute(a.curve);
  if (!a.reference.empty()) config.fom.reference = std::filesystem::absolute(a.reference);
  nvps::RunOptions options;
  options.out_dir = a.out;
  options.threads = a.threads;
  options.plot_script = a.plot;
  const nvps::RunResult r = nvps::run_experiment(command, config, options);
  if (a.dump) dump_matrices(config, r.out_dir);
  for (const auto& note : r.notes) std::cerr << "nvps: note: " << note << '\n';
  for (const auto& [k, v] : r.summary) std::cout << k << " = " << nvps::format_double(v) << '\n';
  std::cout << "wrote " << r.outputs.size() << " file(s) and manifest.json to " << r.out_dir.string() << '\n';
  return kOk;
}

int replay(const Args& a) {
  const std::filesystem::path manifest(a.manifest);
  const std::filesystem::path work = a.out.empty() ? manifest.parent_path() / "replay" : std::filesystem::path(a.out);
  const nvps::ReplayReport r = nvps::replay_manifest(manifest, work, a.threads);
  for (const auto& f : r.matched) std::cout << "match     " << f << '\n';
  for (const auto& f : r.mismatched) std::cout << "MISMATCH  " << f << '\n';
  for (const auto& f : r.missing) std::cout << "MISSING   " << f << '\n';
  return r.ok() ? kOk : kReplayMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NV centre ODMR, readout and emission simulations near plasmonic nanoparticles"};
  app.set_version_flag("--version", std::string(NVPS_VERSION));
  app.require_subcommand(1);
  Args args;
  std::function<int()> action;

  struct Entry {
    nvps::Command command;
    const char* help;
  };
  const Entry entries[] = {
      {nvps::Command::kOdmr, "Steady-state ODMR sweep and its figures of merit"},
      {nvps::Command::kTrace, "Time-domain PL after |0> and |+-1> initialisation"},
      {nvps::Command::kSpectrum, "Emission spectrum (and optional PL versus polarisation angle)"},
      {nvps::Command::kSweep, "ODMR figures of merit across optical intensities"},
      {nvps::Command::kFom, "Figures of merit of an ODMR curve CSV"},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(nvps::command_name(e.command), e.help);
    auto* cfg = sub->add_option("--config", args.config, "YAML run configuration")->check(CLI::ExistingFile);
    if (e.command != nvps::Command::kFom) cfg->required();
    sub->add_option("--out", args.out, "Output directory (overrides the config)");
    sub->add_option("--threads", args.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    sub->add_flag("--plot-script", args.plot, "Also write a matplotlib script for the CSVs");
    sub->add_flag("--dump-matrices", args.dump, "Debug: write H, channels and L as CSV")->group("");
    if (e.command == nvps::Command::kFom) {
      sub->add_option("--curve", args.curve, "ODMR curve CSV (freq_GHz, PL)")->check(CLI::ExistingFile);
      sub->add_option("--reference", args.reference, "Reference ODMR curve CSV")->check(CLI::ExistingFile);
    }
    const nvps::Command command = e.command;
    sub->final_callback([&action, &args, command] { action = [&args, command] { return run(command, args); }; });
  }
  CLI::App* rep = app.add_subcommand("replay", "Rerun a manifest and compare output hashes");
  rep->add_option("--manifest", args.manifest, "manifest.json of a previous run")->required()->check(CLI::ExistingFile);
  rep->add_option("--out", args.out, "Scratch directory (default: <manifest dir>/replay)");
  rep->add_option("--threads", args.threads, "Worker threads")->check(CLI::PositiveNumber);
  rep->final_callback([&action, &args] { action = [&args] { return replay(args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigFailure;
  }
  return action ? guarded(action) : kOk;
}
