#include "sedwave/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sedwave {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, 16);
  std::string s(buf, res.ptr);
  return std::string(16 - s.size(), '0') + s;
}

namespace {

bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

}  // namespace

std::vector<std::pair<double, double>> read_two_columns(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<std::pair<double, double>> rows;
  std::string line;
  int line_no = 0;
  bool seen_row = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r" || line.front() == '#') continue;
    const auto comma = line.find(',');
    double a = 0.0;
    double b = 0.0;
    const bool ok = comma != std::string::npos && line.find(',', comma + 1) == std::string::npos &&
                    parse_double(std::string_view(line).substr(0, comma), a) &&
                    parse_double(std::string_view(line).substr(comma + 1), b);
    if (!ok) {
      if (!seen_row) {
        seen_row = true;  // header
        continue;
      }
      throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected two numeric columns");
    }
    seen_row = true;
    rows.emplace_back(a, b);
  }
  if (rows.empty()) throw IoError(path.string() + ": no data rows");
  return rows;
}

Kernel load_kernel_table(const std::filesystem::path& path) {
  const auto rows = read_two_columns(path);
  std::vector<double> x;
  std::vector<double> k;
  for (const auto& [a, b] : rows) {
    x.push_back(a);
    k.push_back(b);
  }
  return Kernel::tabulated(x, k);
}

Fecundity load_fecundity_table(const std::filesystem::path& path, const ModelParams& p) {
  const auto rows = read_two_columns(path);
  std::vector<double> u;
  std::vector<double> f;
  for (const auto& [a, b] : rows) {
    u.push_back(a);
    f.push_back(b);
  }
  return Fecundity::tabulated(p, std::move(u), std::move(f));
}

DensityField load_field(const std::filesystem::path& path, const Grid& grid) {
  const auto rows = read_two_columns(path);
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].first > rows[i - 1].first))
      throw IoError(path.string() + ": x column must be strictly increasing");
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid.x(i);
    if (x <= rows.front().first) {
      v[i] = rows.front().second;
    } else if (x >= rows.back().first) {
      v[i] = rows.back().second;
    } else {
      const auto it = std::upper_bound(rows.begin(), rows.end(), x,
                                       [](double val, const auto& row) { return val < row.first; });
      const auto& [x1, u1] = *it;
      const auto& [x0, u0] = *(it - 1);
      v[i] = u0 + (u1 - u0) * (x - x0) / (x1 - x0);
    }
  }
  return DensityField(grid, std::move(v), rows.front().second, rows.back().second);
}

nlohmann::json Metadata::to_json() const {
  nlohmann::json j;
  j["config_hash"] = config_hash;
  if (grid) j["grid"] = {{"x_min", grid->x_min()}, {"x_max", grid->x_max()}, {"n", grid->size()}, {"dx", grid->dx()}};
  j["tolerances"] = tolerances;
  return j;
}

std::string Metadata::csv_comment() const { return "# " + to_json().dump(); }

void write_field_csv(std::ostream& os, const DensityField& u, const Metadata& meta) {
  os << meta.csv_comment() << '\n' << "x,u\n";
  const Grid& g = u.grid();
  for (std::size_t i = 0; i < u.size(); ++i) os << format_number(g.x(i)) << ',' << format_number(u[i]) << '\n';
}

void write_trajectory_csv(std::ostream& os, const std::vector<DensityField>& traj, const Metadata& meta) {
  os << meta.csv_comment() << '\n' << "x";
  for (std::size_t n = 0; n < traj.size(); ++n) os << ",u_" << n;
  os << '\n';
  if (traj.empty()) return;
  const Grid& g = traj.front().grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    os << format_number(g.x(i));
    for (const auto& u : traj) os << ',' << format_number(u[i]);
    os << '\n';
  }
}

void write_scan_csv(std::ostream& os, const SpeedResult& res, const Metadata& meta) {
  os << meta.csv_comment() << '\n' << "mu,c\n";
  for (const auto& [mu, c] : res.scan) os << format_number(mu) << ',' << format_number(c) << '\n';
}

nlohmann::json to_json(const ValidationReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  nlohmann::json j{{"passed", rep.all_passed()}, {"contraction_ok", rep.contraction_ok}, {"checks", checks}};
  j["p_contr"] = rep.p_contr ? nlohmann::json(*rep.p_contr) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SpeedResult& res) {
  nlohmann::json scan = nlohmann::json::array();
  for (const auto& [mu, c] : res.scan) scan.push_back({mu, c});
  return {{"c_star", res.c_star}, {"mu_star", res.mu_star}, {"kappa_at_mu", res.kappa_at_mu},
          {"mu_upper", res.mu_upper}, {"clipped", res.clipped}, {"scan", scan}};
}

nlohmann::json to_json(const WaveProfile& wave) {
  return {{"c", wave.c},
          {"residual", wave.residual},
          {"iterations_a", wave.iterations_a},
          {"iterations_phi", wave.iterations_phi},
          {"seed_converged", wave.seed_converged},
          {"final_increment", wave.final_increment},
          {"pin_shift", wave.pin_shift},
          {"max_phi_increase", wave.max_phi_increase},
          {"tail_rate", wave.tail_rate},
          {"tail_imposed", wave.tail_imposed},
          {"ext_left", wave.W.ext_left()},
          {"ext_right", wave.W.ext_right()}};
}

nlohmann::json to_json(const VerificationReport& rep) {
  return {{"passed", rep.passed()},
          {"residual", rep.residual},
          {"monotonicity_violation", rep.monotonicity_violation},
          {"boundary_left_error", rep.boundary_left_error},
          {"boundary_right_error", rep.boundary_right_error},
          {"simulation_drift", rep.simulation_drift},
          {"residual_ok", rep.residual_ok},
          {"monotone_ok", rep.monotone_ok},
          {"boundary_ok", rep.boundary_ok},
          {"simulation_ok", rep.simulation_ok}};
}

nlohmann::json to_json(const FrontTrace& trace) {
  nlohmann::json pos = nlohmann::json::array();
  for (const auto& [n, x] : trace.positions) pos.push_back({n, x});
  return {{"level", trace.level},
          {"positions", pos},
          {"fitted_speed", trace.fitted_speed},
          {"fit_window", {trace.fit_window.first, trace.fit_window.last}}};
}

}  // namespace sedwave
