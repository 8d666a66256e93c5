#include "sedwave/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sedwave/io.hpp"

namespace sedwave {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Typed, path-aware access to one JSON object; rejects unknown keys.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ConfigError(where() + ": " + msg); }
  std::string where() const { return path_.empty() ? "<root>" : path_; }
  std::string child(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  bool has(const std::string& key) {
    seen_.insert(key);
    return j_.contains(key) && !j_.at(key).is_null();
  }

  const json& raw(const std::string& key) {
    if (!has(key)) throw ConfigError(child(key) + ": missing required field");
    return j_.at(key);
  }

  double number(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number()) throw ConfigError(child(key) + ": expected a number, got " + v.dump());
    return v.get<double>();
  }
  void number(const std::string& key, double& out) {
    if (has(key)) out = number(key);
  }
  void number(const std::string& key, std::optional<double>& out) {
    if (has(key)) out = number(key);
  }

  long long integer(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_number_integer()) throw ConfigError(child(key) + ": expected an integer, got " + v.dump());
    return v.get<long long>();
  }
  void integer(const std::string& key, int& out, long long lo) {
    if (!has(key)) return;
    const long long v = integer(key);
    if (v < lo || v > 1'000'000'000) throw ConfigError(child(key) + ": out of range");
    out = static_cast<int>(v);
  }

  std::string string(const std::string& key) {
    const json& v = raw(key);
    if (!v.is_string()) throw ConfigError(child(key) + ": expected a string, got " + v.dump());
    return v.get<std::string>();
  }

  Section object(const std::string& key) { return Section(raw(key), child(key)); }

  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (!seen_.count(key)) throw ConfigError(child(key) + ": unknown field");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

fs::path existing_file(Section& sec, const std::string& key, const fs::path& base) {
  fs::path p = sec.string(key);
  if (p.is_relative()) p = base / p;
  if (!fs::is_regular_file(p)) throw ConfigError(sec.child(key) + ": file not found: " + p.string());
  return p;
}

KernelSpec parse_kernel(Section sec, const fs::path& base) {
  KernelSpec k;
  k.kind = sec.string("kind");
  if (k.kind == "gaussian") {
    k.scale = sec.number("sigma");
  } else if (k.kind == "laplace") {
    k.scale = sec.number("b");
  } else if (k.kind == "table") {
    k.table = existing_file(sec, "path", base);
  } else {
    throw ConfigError(sec.child("kind") + ": expected \"gaussian\", \"laplace\" or \"table\"");
  }
  if (k.kind != "table" && !(k.scale > 0.0)) throw ConfigError(sec.where() + ": kernel scale must be positive");
  sec.finish();
  return k;
}

std::string file_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
  int line = 1;
  int col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

RunConfig parse_config(const json& doc, const fs::path& base_dir) {
  RunConfig cfg;
  Section root(doc, "");

  {
    Section m = root.object("model");
    m.number("s", cfg.model.s);
    m.number("r", cfg.model.r);
    m.number("M", cfg.model.M);
    m.number("p_A", cfg.model.p_A);
    m.number("p_J", cfg.model.p_J);
    m.finish();
  }
  if (root.has("fecundity")) {
    Section f = root.object("fecundity");
    cfg.fecundity.kind = f.string("kind");
    if (cfg.fecundity.kind == "table")
      cfg.fecundity.table = existing_file(f, "path", base_dir);
    else if (cfg.fecundity.kind != "beverton_holt")
      throw ConfigError(f.child("kind") + ": expected \"beverton_holt\" or \"table\"");
    f.finish();
  }
  cfg.kernel_adult = parse_kernel(root.object("kernel_adult"), base_dir);
  cfg.kernel_juvenile = root.has("kernel_juvenile") ? parse_kernel(root.object("kernel_juvenile"), base_dir)
                                                    : cfg.kernel_adult;
  {
    Section g = root.object("grid");
    cfg.x_min = g.number("x_min");
    cfg.x_max = g.number("x_max");
    const long long n = g.integer("n");
    if (n < 3) throw ConfigError(g.child("n") + ": need at least 3 grid points");
    if (!(cfg.x_max > cfg.x_min)) throw ConfigError(g.where() + ": x_max must exceed x_min");
    cfg.n = static_cast<std::size_t>(n);
    g.finish();
  }
  if (root.has("run")) {
    Section run = root.object("run");
    if (run.has("speed")) {
      Section s = run.object("speed");
      s.number("mu_max", cfg.speed.mu_max);
      s.number("mu_min", cfg.speed.mu_min);
      s.number("tol", cfg.speed.tol);
      s.integer("scan_points", cfg.speed.scan_points, 3);
      s.finish();
    }
    if (run.has("wave")) {
      Section w = run.object("wave");
      if (w.has("c")) {
        const json& c = w.raw("c");
        if (c.is_number())
          cfg.wave_c = format_number(c.get<double>());
        else if (c.is_string() && c.get<std::string>() == "cstar")
          cfg.wave_c = "cstar";
        else
          throw ConfigError(w.child("c") + ": expected a number or \"cstar\"");
      }
      w.number("tol", cfg.wave.tol);
      w.integer("max_iter", cfg.wave.max_iter, 1);
      w.number("tol_a", cfg.wave.tol_a);
      w.integer("max_iter_a", cfg.wave.max_iter_a, 1);
      w.number("edge_tol", cfg.wave.edge_tol);
      w.number("edge_margin", cfg.wave.edge_margin);
      w.number("tail_level", cfg.wave.tail_level);
      w.number("half_height", cfg.wave.half_height);
      w.number("ramp_width", cfg.wave.ramp_width);
      cfg.verify.edge_margin = cfg.wave.edge_margin;
      w.number("residual_tol", cfg.verify.residual_tol);
      w.number("monotone_tol", cfg.verify.monotone_tol);
      w.number("boundary_tol", cfg.verify.boundary_tol);
      w.number("drift_tol", cfg.verify.drift_tol);
      w.integer("verify_generations", cfg.verify.n_gen, 0);
      w.finish();
    }
    if (run.has("simulate")) {
      Section s = run.object("simulate");
      s.integer("n_gen", cfg.simulate.n_gen, 0);
      s.number("level", cfg.simulate.level);
      if (s.has("fit_window")) {
        const json& fw = s.raw("fit_window");
        if (!fw.is_array() || fw.size() != 2 || !fw[0].is_number_integer() || !fw[1].is_number_integer())
          throw ConfigError(s.child("fit_window") + ": expected [first, last] generation integers");
        cfg.simulate.fit_window = {fw[0].get<int>(), fw[1].get<int>()};
      }
      if (s.has("initial")) {
        Section ic = s.object("initial");
        cfg.simulate.initial.kind = ic.string("kind");
        if (cfg.simulate.initial.kind == "step") {
          ic.number("location", cfg.simulate.initial.location);
          ic.number("value", cfg.simulate.initial.value);
        } else if (cfg.simulate.initial.kind == "constant") {
          cfg.simulate.initial.value = ic.number("value");
        } else if (cfg.simulate.initial.kind == "file") {
          cfg.simulate.initial.file = existing_file(ic, "path", base_dir);
        } else {
          throw ConfigError(ic.child("kind") + ": expected \"step\", \"constant\" or \"file\"");
        }
        ic.finish();
      }
      s.finish();
    }
    run.finish();
  }
  root.finish();

  std::string canonical = doc.dump();
  for (const fs::path* p : {&cfg.fecundity.table, &cfg.kernel_adult.table, &cfg.kernel_juvenile.table,
                            &cfg.simulate.initial.file})
    if (!p->empty()) canonical += file_bytes(*p);
  cfg.hash = hex64(fnv1a64(canonical));
  return cfg;
}

std::vector<RunConfig> load_configs(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ConfigError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
  const fs::path base = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::vector<RunConfig> out;
  try {
    if (doc.is_array()) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        try {
          out.push_back(parse_config(doc[i], base));
        } catch (const ConfigError& e) {
          throw ConfigError("[" + std::to_string(i) + "] " + e.what());
        }
      }
      if (out.empty()) throw ConfigError("empty configuration list");
    } else {
      out.push_back(parse_config(doc, base));
    }
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return out;
}

RunConfig load_config(const fs::path& path) {
  auto all = load_configs(path);
  if (all.size() != 1) throw ConfigError(path.string() + ": expected a single configuration object");
  return std::move(all.front());
}

Grid make_grid(const RunConfig& cfg) { return Grid::from_range(cfg.x_min, cfg.x_max, cfg.n); }

Kernel make_kernel(const KernelSpec& spec) {
  if (spec.kind == "gaussian") return Kernel::gaussian(spec.scale);
  if (spec.kind == "laplace") return Kernel::laplace(spec.scale);
  return load_kernel_table(spec.table);
}

Fecundity make_fecundity(const RunConfig& cfg) {
  if (cfg.fecundity.kind == "table") return load_fecundity_table(cfg.fecundity.table, cfg.model);
  return Fecundity::beverton_holt(cfg.model);
}

OperatorContext make_context(const RunConfig& cfg) {
  return OperatorContext(cfg.model, make_fecundity(cfg), make_kernel(cfg.kernel_adult),
                         make_kernel(cfg.kernel_juvenile), make_grid(cfg));
}

DensityField make_initial(const RunConfig& cfg, const Grid& grid) {
  const InitialSpec& ic = cfg.simulate.initial;
  if (ic.kind == "file") return load_field(ic.file, grid);
  const double value = ic.value.value_or(cfg.model.M);
  if (ic.kind == "constant") return DensityField::constant(grid, value);
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = grid.x(i) < ic.location ? value : 0.0;
  return DensityField(grid, std::move(v), value, 0.0);
}

}  // namespace sedwave
