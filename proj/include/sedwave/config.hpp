#pragma once

// JSON run configuration shared by the command-line subcommands.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "sedwave/errors.hpp"
#include "sedwave/model.hpp"
#include "sedwave/operators.hpp"
#include "sedwave/simulate.hpp"
#include "sedwave/speed.hpp"
#include "sedwave/wave.hpp"

namespace sedwave {

/// Malformed configuration: bad JSON, a wrong type, an unknown or missing
/// field, or a referenced file that does not exist.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct KernelSpec {
  std::string kind = "gaussian";  // gaussian | laplace | table
  double scale = 1.0;             // sigma or b
  std::filesystem::path table;
};

struct FecunditySpec {
  std::string kind = "beverton_holt";  // beverton_holt | table
  std::filesystem::path table;
};

struct InitialSpec {
  std::string kind = "step";  // step | constant | file
  double location = 0.0;      // step: M for x < location, 0 beyond
  std::optional<double> value;  // step height or constant; default M
  std::filesystem::path file;
};

struct SimulateSettings {
  int n_gen = 60;
  std::optional<double> level;  // default M/2
  FitWindow fit_window{30, 60};
  InitialSpec initial;
};

struct RunConfig {
  ModelParams model;
  FecunditySpec fecundity;
  KernelSpec kernel_adult;
  KernelSpec kernel_juvenile;
  double x_min = -50.0;
  double x_max = 150.0;
  std::size_t n = 4096;

  SpeedOptions speed;
  std::optional<std::string> wave_c;  // number or "cstar"
  WaveOptions wave;
  VerifyOptions verify;
  SimulateSettings simulate;

  std::string hash;  // FNV-1a 64 of the canonical document
};

/// Parses a configuration document. Relative paths resolve against base_dir.
RunConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir);

/// Reads and parses one configuration, or every element of a top-level array.
std::vector<RunConfig> load_configs(const std::filesystem::path& path);
RunConfig load_config(const std::filesystem::path& path);

Grid make_grid(const RunConfig& cfg);
Kernel make_kernel(const KernelSpec& spec);
Fecundity make_fecundity(const RunConfig& cfg);
OperatorContext make_context(const RunConfig& cfg);
DensityField make_initial(const RunConfig& cfg, const Grid& grid);

}  // namespace sedwave
