// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

// Command-line front end: vqe, correlation, plateau and ed subcommands.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vqelab/config.hpp"
#include "vqelab/experiments.hpp"

namespace {

using vqelab::ConfigError;
using vqelab::ExperimentConfig;
using vqelab::ExperimentKind;
using vqelab::Settings;
using json = nlohmann::json;

enum ExitCode {
  kOk = 0,
  kRunFailed = 1,
  kUsage = 2,
  kConfigInvalid = 3,
  kConfigMissing = 4,
  kOutputUnwritable = 5,
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  ExperimentKind kind;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> flags;
  std::string config_path;
  bool sector = false;
};

void add_common_options(Command& cmd) {
  auto* app = cmd.app;
  auto opt = [&](const std::string& key, const std::string& help) {
    app->add_option("--" + key, cmd.flags[key], help);
  };
  opt("model", "hubbard-nnn or tfim");
  opt("mapping", "jw, bk or none");
  opt("family", "match or generic");
  opt("qubits", "comma-separated system sizes");
  opt("layers", "comma-separated ansatz depths");
  opt("max-layers", "report depths 0..max-layers");
  opt("t", "hopping amplitude");
  opt("v1", "nearest-neighbour interaction");
  opt("v2", "next-nearest-neighbour interaction");
  opt("h", "transverse field");
  app->add_option("--periodic", cmd.flags["periodic"],
                  "periodic boundary conditions (bare flag means true)")
      ->expected(0, 1)
      ->default_str("true");
  opt("filling", "particle count, or 'half'");
  opt("samples", "plateau samples per (n, layers)");
  opt("delta", "finite-difference step");
  opt("seed", "master seed");
  opt("threads", "worker threads for plateau sampling");
  opt("output", "output CSV path");
  app->add_option("--config", cmd.config_path, "key = value config file");
}

// Removes options that were not given on the command line.
Settings given_flags(const Command& cmd) {
  Settings out;
  for (const auto& [key, value] : cmd.flags) {
    const auto* o = cmd.app->get_option_no_throw("--" + key);
    if (o == nullptr || o->count() == 0) continue;
    out[key] = (key == "periodic" && value.empty()) ? "true" : value;
  }
  return out;
}

ExperimentConfig resolve(const Command& cmd) {
  Settings settings;
  if (!cmd.config_path.empty()) {
    if (!std::filesystem::exists(cmd.config_path)) {
      throw std::filesystem::filesystem_error(
          "config file not found", cmd.config_path,
          std::make_error_code(std::errc::no_such_file_or_directory));
    }
    settings = vqelab::read_config_file(cmd.config_path);
  }
  for (const auto& [k, v] : given_flags(cmd)) settings[k] = v;
  return vqelab::resolve_config(cmd.kind, settings);
}

std::string default_output(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Convergence:
      return "vqe.csv";
    case ExperimentKind::Correlation:
      return "correlation.csv";
    case ExperimentKind::Plateau:
      return "plateau.csv";
    case ExperimentKind::ExactDiag:
      return "";
  }
  return "";
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw OutputError("cannot write output file '" + path + "'");
  return out;
}

// Opens every output up front so an unwritable path fails before any work.
std::map<std::string, std::ofstream> open_outputs(
    const std::vector<std::string>& paths) {
  std::map<std::string, std::ofstream> files;
  for (const auto& p : paths) files.emplace(p, open_output(p));
  return files;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw OutputError("failed while writing '" + path + "'");
}

json run(const ExperimentConfig& cfg, const std::string& output, bool sector,
         std::vector<std::string>& written) {
  json runs = json::array();
  switch (cfg.experiment) {
    case ExperimentKind::Convergence: {
      auto files = open_outputs({output});
      const auto rows = vqelab::run_convergence(cfg);
      vqelab::write_convergence_csv(files.at(output), rows);
      finish(files.at(output), output);
      written = {output};
      for (const auto& r : rows) {
        runs.push_back({{"n", r.n_qubits}, {"layers", r.layers},
                        {"iterations", r.iterations}, {"status", r.status}});
      }
      break;
    }
    case ExperimentKind::Correlation: {
      const auto summary = vqelab::sibling_path(output, "_summary", ".csv");
      auto files = open_outputs({output, summary});
      const auto res = vqelab::run_correlation(cfg);
      vqelab::write_correlation_csv(files.at(output), res.records);
      vqelab::write_correlation_summary_csv(files.at(summary), res.summaries);
      finish(files.at(output), output);
      finish(files.at(summary), summary);
      written = {output, summary};
      for (const auto& s : res.summaries) {
        runs.push_back({{"n", s.n_qubits}, {"layers", s.layers},
                        {"ground_degeneracy", s.degeneracy}, {"status", "ok"}});
      }
      break;
    }
    case ExperimentKind::Plateau: {
      const auto aggregate = vqelab::sibling_path(output, "_aggregate", ".csv");
      const auto components = vqelab::sibling_path(output, "_components", ".csv");
      auto files = open_outputs({output, aggregate, components});
      const auto res = vqelab::run_plateau(cfg);
      vqelab::write_plateau_raw_csv(files.at(output), res.samples);
      vqelab::write_plateau_aggregate_csv(files.at(aggregate), res.aggregates);
      vqelab::write_plateau_components_csv(files.at(components), res.aggregates);
      for (const auto& p : {output, aggregate, components}) finish(files.at(p), p);
      written = {output, aggregate, components};
      for (const auto& a : res.aggregates) {
        runs.push_back({{"n", a.n_qubits}, {"layers", a.layers},
                        {"samples_used", a.samples_used},
                        {"samples_excluded", a.samples_excluded},
                        {"status", a.samples_excluded == 0 ? "ok" : "partial"}});
      }
      break;
    }
    case ExperimentKind::ExactDiag: {
      std::map<std::string, std::ofstream> files;
      if (!output.empty()) files = open_outputs({output});
      const auto rows = vqelab::run_exact(cfg, sector);
      std::cout << std::setprecision(15);
      for (const auto& r : rows) {
        std::cout << "n=" << r.n_qubits << " sector=" << r.sector
                  << " E0=" << r.energy << " degeneracy=" << r.degeneracy
                  << '\n';
        runs.push_back({{"n", r.n_qubits}, {"sector", r.sector},
                        {"energy", r.energy}, {"degeneracy", r.degeneracy},
                        {"status", "ok"}});
      }
      if (!output.empty()) {
        auto& out = files.at(output);
        out << std::setprecision(17) << "n,sector,e0,degeneracy\n";
        for (const auto& r : rows) {
          out << r.n_qubits << ',' << r.sector << ',' << r.energy << ','
              << r.degeneracy << '\n';
        }
        finish(out, output);
        written = {output};
      }
      break;
    }
  }
  return runs;
}

int execute(const Command& cmd) {
  ExperimentConfig cfg;
  try {
    cfg = resolve(cmd);
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: config file not found: '" << e.path1().string()
              << "'\n";
    return kConfigMissing;
  } catch (const ConfigError& e) {
    std::cerr << "error: invalid configuration: " << e.what() << '\n';
    return kConfigInvalid;
  }

  const std::string output =
      cfg.output.empty() ? default_output(cfg.experiment) : cfg.output;
  const auto start = std::chrono::system_clock::now();
  const auto t0 = std::chrono::steady_clock::now();
  json manifest;
  manifest["tool"] = "vqelab";
  manifest["version"] = VQELAB_VERSION;
  manifest["command"] = std::string(vqelab::to_string(cfg.experiment));
  manifest["config"] = vqelab::to_settings(cfg);
  manifest["seed"] = cfg.seed;
  manifest["started_at"] = utc_timestamp(start);

  int code = kOk;
  std::vector<std::string> written;
  try {
    manifest["runs"] = run(cfg, output, cmd.sector, written);
    manifest["status"] = "ok";
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOutputUnwritable;
  } catch (const ConfigError& e) {
    std::cerr << "error: invalid configuration: " << e.what() << '\n';
    return kConfigInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: run failed: " << e.what() << '\n';
    manifest["status"] = "failed";
    manifest["error"] = e.what();
    code = kRunFailed;
  }
  const auto wall = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  manifest["finished_at"] = utc_timestamp(std::chrono::system_clock::now());
  manifest["wall_time_seconds"] = wall;
  manifest["outputs"] = written;

  if (output.empty()) return code;
  const auto manifest_path = vqelab::sibling_path(output, "_manifest", ".json");
  std::ofstream mf(manifest_path, std::ios::trunc);
  if (!mf) {
    std::cerr << "error: cannot write output file '" << manifest_path << "'\n";
    return kOutputUnwritable;
  }
  mf << manifest.dump(2) << '\n';
  if (code == kOk) {
    for (const auto& p : written) std::cerr << "wrote " << p << '\n';
    std::cerr << "wrote " << manifest_path << '\n';
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statevector VQE workbench for lattice fermion and spin models"};
  // -h is taken by the transverse field.
  app.set_help_flag("--help", "print this help message and exit");
  app.set_version_flag("--version", std::string(VQELAB_VERSION));
  app.require_subcommand(1);

  std::vector<Command> commands{
      {ExperimentKind::Convergence, nullptr, {}, {}, false},
      {ExperimentKind::Correlation, nullptr, {}, {}, false},
      {ExperimentKind::Plateau, nullptr, {}, {}, false},
      {ExperimentKind::ExactDiag, nullptr, {}, {}, false},
  };
  commands[0].app = app.add_subcommand("vqe", "layerwise VQE energy convergence");
  commands[1].app = app.add_subcommand("correlation", "density-density correlation functions");
  commands[2].app = app.add_subcommand("plateau", "gradient variance at random parameters");
  commands[3].app = app.add_subcommand("ed", "exact ground energy and degeneracy");
  for (auto& c : commands) add_common_options(c);
  commands[3].app->add_flag("--sector", commands[3].sector,
                            "restrict to the configured particle sector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  for (const auto& c : commands) {
    if (c.app->parsed()) return execute(c);
  }
  return kUsage;
}
