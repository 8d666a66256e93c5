#include "sedwave/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sedwave/config.hpp"
#include "sedwave/io.hpp"

namespace sedwave {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Model checks every command runs before touching the operators.
ValidationReport full_validation(const RunConfig& cfg) {
  ValidationReport rep = validate_params(cfg.model);
  if (!rep.all_passed()) return rep;
  try {
    const Fecundity F = make_fecundity(cfg);
    ValidationReport fr = validate_fecundity(F, cfg.model, 1001);
    for (auto& c : fr.checks) rep.checks.push_back(std::move(c));
    const double p_contr = growth_lipschitz_bound(cfg.model, F);
    rep.p_contr = p_contr;
    rep.contraction_ok = p_contr < 1.0;
  } catch (const DomainError& e) {
    rep.add("fecundity", false, e.what());
  }
  for (const KernelSpec* k : {&cfg.kernel_adult, &cfg.kernel_juvenile}) {
    try {
      make_kernel(*k);
    } catch (const DomainError& e) {
      rep.add(k == &cfg.kernel_adult ? "kernel_adult" : "kernel_juvenile", false, e.what());
    }
  }
  return rep;
}

std::string contraction_message(const ValidationReport& rep) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "contraction condition violated: s(1-p_A) + (1-p_J)kr = %.6g >= 1",
                rep.p_contr.value_or(NAN));
  return buf;
}

// Throws a domain failure when the model is unusable. The contraction
// condition is left to the operations that need it.
void require_valid(const RunConfig& cfg) {
  const ValidationReport rep = full_validation(cfg);
  for (const auto& c : rep.checks)
    if (!c.passed) throw DomainError("invalid model: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

Metadata metadata(const RunConfig& cfg, json tolerances) {
  Metadata m;
  m.config_hash = cfg.hash;
  m.tolerances = std::move(tolerances);
  m.grid = make_grid(cfg);
  return m;
}

json speed_tolerances(const RunConfig& cfg) {
  return {{"mu_min", cfg.speed.mu_min}, {"mu_max", cfg.speed.mu_max}, {"tol", cfg.speed.tol},
          {"scan_points", cfg.speed.scan_points}};
}

json speed_document(const RunConfig& cfg) {
  const OperatorContext ctx = make_context(cfg);
  json doc;
  doc["metadata"] = metadata(cfg, speed_tolerances(cfg)).to_json();
  try {
    const SpeedResult res = spreading_speed(ctx, cfg.speed);
    doc["result"] = to_json(res);
    if (res.clipped) doc["note"] = "exponent search clipped to mu < " + format_number(res.mu_upper) +
                                   " by the kernel MGF domain";
    doc["ok"] = true;
  } catch (const MinimizerAtBoundary& e) {
    doc["result"] = to_json(e.partial());
    doc["error"] = e.what();
    doc["ok"] = false;
  }
  return doc;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto cfgs = load_configs(path);
  json docs = json::array();
  bool all_ok = true;
  for (const auto& cfg : cfgs) {
    const ValidationReport rep = full_validation(cfg);
    json doc = to_json(rep);
    doc["metadata"] = metadata(cfg, json::object()).to_json();
    docs.push_back(doc);
    if (!rep.contraction_ok) err << contraction_message(rep) << "\n";
    for (const auto& c : rep.checks)
      if (!c.passed) err << "check failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    all_ok = all_ok && rep.all_passed() && rep.contraction_ok;
  }
  out << dump(cfgs.size() == 1 ? docs.front() : docs);
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_speed(const std::string& path, const std::string& out_path, const std::string& scan_out, int jobs,
              std::ostream& out, std::ostream& err) {
  const auto cfgs = load_configs(path);
  if (!scan_out.empty() && cfgs.size() != 1) throw UsageError("--scan-out needs a single configuration");
  for (const auto& cfg : cfgs) require_valid(cfg);

  std::vector<json> docs(cfgs.size());
  std::vector<std::string> failures(cfgs.size());
  const long count = static_cast<long>(cfgs.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs) if (jobs > 1)
  for (long i = 0; i < count; ++i) {
    try {
      docs[static_cast<std::size_t>(i)] = speed_document(cfgs[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  bool ok = true;
  for (std::size_t i = 0; i < cfgs.size(); ++i) {
    if (!failures[i].empty()) throw DomainError(failures[i]);
    if (!docs[i]["ok"].get<bool>()) {
      err << "speed: " << docs[i]["error"].get<std::string>() << "\n";
      ok = false;
    } else if (docs[i].contains("note")) {
      err << "note: " << docs[i]["note"].get<std::string>() << "\n";
    }
  }
  write_text(out_path, dump(cfgs.size() == 1 ? json(docs.front()) : json(docs)), out);
  if (!scan_out.empty()) {
    const RunConfig& cfg = cfgs.front();
    SpeedResult res;
    for (const auto& row : docs.front()["result"]["scan"]) res.scan.emplace_back(row[0].get<double>(), row[1].get<double>());
    std::ostringstream ss;
    write_scan_csv(ss, res, metadata(cfg, speed_tolerances(cfg)));
    write_text(scan_out, ss.str(), out);
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_wave(const std::string& path, std::string c_arg, const std::string& out_path, const std::string& report_path,
             std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_config(path);
  require_valid(cfg);
  const OperatorContext ctx = make_context(cfg);
  for (const auto& w : ctx.warnings()) err << "warning: " << w << "\n";

  if (c_arg.empty()) c_arg = cfg.wave_c.value_or("cstar");
  std::optional<double> c_star;
  double c = 0.0;
  if (c_arg == "cstar") {
    c_star = spreading_speed(ctx, cfg.speed).c_star;
    c = *c_star;
  } else {
    std::size_t used = 0;
    try {
      c = std::stod(c_arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != c_arg.size() || !std::isfinite(c)) throw UsageError("--c expects a number or \"cstar\"");
  }

  const json tolerances{{"tol", cfg.wave.tol},
                        {"max_iter", cfg.wave.max_iter},
                        {"tol_a", cfg.wave.tol_a},
                        {"max_iter_a", cfg.wave.max_iter_a},
                        {"edge_tol", cfg.wave.edge_tol},
                        {"edge_margin", cfg.wave.edge_margin},
                        {"tail_level", cfg.wave.tail_level},
                        {"residual_tol", cfg.verify.residual_tol},
                        {"monotone_tol", cfg.verify.monotone_tol},
                        {"boundary_tol", cfg.verify.boundary_tol},
                        {"drift_tol", cfg.verify.drift_tol},
                        {"verify_generations", cfg.verify.n_gen}};
  const Metadata meta = metadata(cfg, tolerances);

  std::optional<WaveProfile> built;
  try {
    built = construct_wave(c, ctx, cfg.wave);
  } catch (const DegenerateWave& e) {
    err << "wave: degenerate wave: " << e.what() << "\n";
    return kExitFailure;
  } catch (const NoConvergence& e) {
    err << "wave: " << e.what() << " (iterations " << e.iterations() << ", last increment "
        << format_number(e.last_increment()) << ")\n";
    return kExitFailure;
  }
  const WaveProfile& wave = *built;
  const VerificationReport rep = verify_wave(wave, ctx, cfg.verify);

  json doc;
  doc["metadata"] = meta.to_json();
  doc["wave"] = to_json(wave);
  doc["verification"] = to_json(rep);
  if (c_star) doc["c_star"] = *c_star;
  write_text(report_path, dump(doc), out);
  if (!out_path.empty()) {
    std::ostringstream ss;
    write_field_csv(ss, wave.W, meta);
    write_text(out_path, ss.str(), out);
  }
  if (!rep.passed()) err << "wave: verification failed\n";
  return rep.passed() ? kExitOk : kExitFailure;
}

int cmd_simulate(const std::string& path, std::optional<int> n_gen_arg, const std::string& out_path,
                 const std::string& front_path, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = load_config(path);
  require_valid(cfg);
  const OperatorContext ctx = make_context(cfg);
  for (const auto& w : ctx.warnings()) err << "warning: " << w << "\n";

  const int n_gen = n_gen_arg.value_or(cfg.simulate.n_gen);
  const double level = cfg.simulate.level.value_or(0.5 * cfg.model.M);
  FitWindow window = cfg.simulate.fit_window;
  if (window.last > n_gen) throw UsageError("fit window ends after the last generation");

  const Grid grid = make_grid(cfg);
  const DensityField u0 = make_initial(cfg, grid);
  if (!u0.in_CM(cfg.model.M)) throw DomainError("initial condition leaves [0, M]");
  const auto traj = simulate(u0, ctx, n_gen);

  const json tolerances{{"n_gen", n_gen}, {"level", level}, {"fit_window", {window.first, window.last}}};
  const Metadata meta = metadata(cfg, tolerances);
  if (!out_path.empty()) {
    std::ostringstream ss;
    write_trajectory_csv(ss, traj, meta);
    write_text(out_path, ss.str(), out);
  }

  FrontTrace trace;
  try {
    trace = track_front(traj, level, window);
  } catch (const LevelNotCrossed& e) {
    err << "simulate: " << e.what() << "\n";
    return kExitFailure;
  }
  json doc;
  doc["metadata"] = meta.to_json();
  doc["front"] = to_json(trace);
  try {
    const double c_star = spreading_speed(ctx, cfg.speed).c_star;
    doc["c_star"] = c_star;
    doc["relative_deviation"] = (trace.fitted_speed - c_star) / c_star;
  } catch (const MinimizerAtBoundary& e) {
    doc["c_star"] = nullptr;
    doc["note"] = e.what();
  }
  write_text(front_path, dump(doc), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spread of a partially sedentary population: speeds, traveling waves, simulation", "sedwave"};
  app.require_subcommand(1);

  std::string config;
  std::string out_path;
  std::string scan_out;
  std::string report_path;
  std::string front_path;
  std::string c_arg;
  std::optional<int> n_gen;
  int jobs = 1;

  auto* validate = app.add_subcommand("validate", "Check model parameters, fecundity and kernels");
  validate->add_option("config", config, "JSON configuration (object or list)")->required();

  auto* speed = app.add_subcommand("speed", "Spreading speed c*");
  speed->add_option("config", config, "JSON configuration (object or list)")->required();
  speed->add_option("--out", out_path, "SpeedResult JSON (default stdout)");
  speed->add_option("--scan-out", scan_out, "CSV of the (mu, c(mu)) scan");
  speed->add_option("--jobs", jobs, "Parallel sweep entries")->check(CLI::PositiveNumber);

  auto* wave = app.add_subcommand("wave", "Construct and verify a traveling wave");
  wave->add_option("config", config, "JSON configuration")->required();
  wave->add_option("--c", c_arg, "Wave speed, or \"cstar\"");
  wave->add_option("--out", out_path, "Profile CSV (x,u)");
  wave->add_option("--report", report_path, "Report JSON (default stdout)");

  auto* sim = app.add_subcommand("simulate", "Evolve the initial condition and track the front");
  sim->add_option("config", config, "JSON configuration")->required();
  sim->add_option("--n-gen", n_gen, "Number of generations")->check(CLI::NonNegativeNumber);
  sim->add_option("--out", out_path, "Trajectory CSV (x,u_0..u_N)");
  sim->add_option("--front-out", front_path, "FrontTrace JSON (default stdout)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(config, out, err);
    if (speed->parsed()) return cmd_speed(config, out_path, scan_out, jobs, out, err);
    if (wave->parsed()) return cmd_wave(config, c_arg, out_path, report_path, out, err);
    return cmd_simulate(config, n_gen, out_path, front_path, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ContractionViolated& e) {
    err << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace sedwave
