#pragma once

// CSV and JSON serialisation of fields, trajectories and reports.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sedwave/kernel.hpp"
#include "sedwave/model.hpp"
#include "sedwave/simulate.hpp"
#include "sedwave/speed.hpp"
#include "sedwave/wave.hpp"

namespace sedwave {

class IoError : public Error {
 public:
  using Error::Error;
};

/// Shortest round-trip decimal representation.
std::string format_number(double v);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex64(std::uint64_t v);

/// Two numeric columns. Blank lines and lines starting with '#' are skipped,
/// as is a first non-numeric row (the header).
std::vector<std::pair<double, double>> read_two_columns(const std::filesystem::path& path);

Kernel load_kernel_table(const std::filesystem::path& path);
Fecundity load_fecundity_table(const std::filesystem::path& path, const ModelParams& p);

/// Samples (x, u) interpolated linearly onto `grid`; outside the samples the
/// end values are held, and they become the extensions.
DensityField load_field(const std::filesystem::path& path, const Grid& grid);

/// Provenance written ahead of every output.
struct Metadata {
  std::string config_hash;
  nlohmann::json tolerances = nlohmann::json::object();
  std::optional<Grid> grid;

  nlohmann::json to_json() const;
  /// Single '#'-prefixed CSV comment line.
  std::string csv_comment() const;
};

void write_field_csv(std::ostream& os, const DensityField& u, const Metadata& meta);
/// One row per grid point: x, u_0, ..., u_N.
void write_trajectory_csv(std::ostream& os, const std::vector<DensityField>& traj, const Metadata& meta);
void write_scan_csv(std::ostream& os, const SpeedResult& res, const Metadata& meta);

nlohmann::json to_json(const ValidationReport& rep);
nlohmann::json to_json(const SpeedResult& res);
nlohmann::json to_json(const WaveProfile& wave);
nlohmann::json to_json(const VerificationReport& rep);
nlohmann::json to_json(const FrontTrace& trace);

}  // namespace sedwave
