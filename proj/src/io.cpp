#include "optdes/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace optdes {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void emit_density_csv(const DesignDensity& f, const QuadratureGrid& grid,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  for (int j = 0; j < grid.dimension; ++j) out << "w" << j + 1 << ",";
  out << "mu,f,f_mu\n";
  for (long i = 0; i < grid.size(); ++i) {
    for (int j = 0; j < grid.dimension; ++j) out << fmt(grid.nodes(i, j)) << ",";
    out << fmt(grid.measures[i]) << "," << fmt(f.values[i]) << ","
        << fmt(f.values[i] * grid.measures[i]) << "\n";
  }
}

void emit_history_csv(const std::vector<IterationRecord>& history,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "iter,criterion,l1_step,kl_step,cert_gap,wall_time_ms\n";
  for (const auto& r : history) {
    out << r.iter << "," << fmt(r.criterion_value) << "," << fmt(r.l1_step)
        << "," << fmt(r.kl_step) << "," << fmt(r.cert_gap) << ","
        << fmt(r.wall_time_s * 1000.0) << "\n";
  }
}

void emit_support_csv(const std::vector<SupportPoint>& support,
                      double residual_mass, int dimension,
                      const std::filesystem::path& path) {
  auto out = open_out(path);
  for (int j = 0; j < dimension; ++j) out << "w" << j + 1 << ",";
  out << "weight,n_cells,peak_density\n";
  for (const auto& sp : support) {
    for (int j = 0; j < dimension; ++j) out << fmt(sp.location[j]) << ",";
    out << fmt(sp.weight) << "," << sp.n_cells << "," << fmt(sp.peak_density)
        << "\n";
  }
  out << "# residual_mass," << fmt(residual_mass) << "\n";
}

DesignDensity read_density_csv(const std::filesystem::path& path,
                               const QuadratureGrid& grid) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw Error(path.string() + ": empty file");
  // f is the second-to-last column
  DesignDensity f;
  f.values.resize(grid.size());
  long row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (row >= grid.size())
      throw Error(path.string() + ": more rows than grid nodes");
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(cell);
    if (cols.size() < 2) throw Error(path.string() + ": malformed row");
    f.values[row++] = std::stod(cols[cols.size() - 2]);
  }
  if (row != grid.size())
    throw Error(path.string() + ": fewer rows than grid nodes");
  return f;
}

namespace {

using nlohmann::json;

json model_to_json(const ModelConfig& m) {
  json j;
  switch (m.kind) {
    case ModelConfig::Kind::FullQuadratic:
      j["kind"] = "full-quadratic";
      break;
    case ModelConfig::Kind::LinearNoIntercept:
      j["kind"] = "linear-no-intercept";
      break;
    case ModelConfig::Kind::Custom:
      j["kind"] = "custom";
      j["exponents"] = m.exponents;
      break;
  }
  j["dimension"] = m.dimension;
  return j;
}

ModelConfig model_from_json(const json& j) {
  ModelConfig m;
  const std::string kind = j.at("kind");
  if (kind == "full-quadratic")
    m.kind = ModelConfig::Kind::FullQuadratic;
  else if (kind == "linear-no-intercept")
    m.kind = ModelConfig::Kind::LinearNoIntercept;
  else if (kind == "custom") {
    m.kind = ModelConfig::Kind::Custom;
    m.exponents = j.at("exponents").get<std::vector<std::vector<int>>>();
  } else
    throw ConfigError("unknown model kind '" + kind + "'");
  m.dimension = j.at("dimension");
  return m;
}

json region_to_json(const RegionConfig& r) {
  json j;
  if (r.kind == RegionConfig::Kind::Box) {
    j["kind"] = "box";
    json iv = json::array();
    for (const auto& [a, b] : r.intervals) iv.push_back({a, b});
    j["intervals"] = iv;
    j["n_per_dim"] = r.n_per_dim;
    j["closed"] = r.closed;
  } else {
    j["kind"] = "disc";
    j["center"] = {r.center_x, r.center_y};
    j["radius"] = r.radius;
    j["n_r"] = r.n_r;
    j["n_theta"] = r.n_theta;
  }
  return j;
}

RegionConfig region_from_json(const json& j) {
  RegionConfig r;
  const std::string kind = j.at("kind");
  if (kind == "box") {
    r.kind = RegionConfig::Kind::Box;
    for (const auto& iv : j.at("intervals"))
      r.intervals.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
    r.n_per_dim = j.value("n_per_dim", 41);
    r.closed = j.value("closed", false);
  } else if (kind == "disc") {
    r.kind = RegionConfig::Kind::Disc;
    if (j.contains("center")) {
      r.center_x = j["center"].at(0);
      r.center_y = j["center"].at(1);
    }
    r.radius = j.value("radius", 1.0);
    r.n_r = j.value("n_r", 80);
    r.n_theta = j.value("n_theta", 160);
  } else
    throw ConfigError("unknown region kind '" + kind + "'");
  return r;
}

}  // namespace

std::string config_to_json(const RunConfig& cfg) {
  json j;
  j["model"] = model_to_json(cfg.model);
  j["region"] = region_to_json(cfg.region);
  j["criterion"] = cfg.criterion == Criterion::D ? "D" : "A";
  json s;
  s["max_iters"] = cfg.solve.max_iters;
  s["l1_tol"] = cfg.solve.l1_tol;
  s["cert_tol"] = cfg.solve.cert_tol;
  s["record_history"] = cfg.solve.record_history;
  if (cfg.solve.monotonicity_action_set)
    s["monotonicity_action"] =
        cfg.solve.monotonicity_action == MonotonicityAction::Fail ? "fail"
                                                                  : "warn";
  j["solve"] = s;
  j["out_dir"] = cfg.out_dir;
  json emit = json::array();
  if (cfg.emit.report) emit.push_back("report");
  if (cfg.emit.history) emit.push_back("history");
  if (cfg.emit.density) emit.push_back("density");
  if (cfg.emit.support) emit.push_back("support");
  j["emit"] = emit;
  j["threads"] = cfg.threads;
  if (!cfg.preset_name.empty()) j["preset"] = cfg.preset_name;
  return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  try {
    RunConfig cfg;
    const std::string crit = j.value("criterion", "D");
    if (crit != "D" && crit != "A")
      throw ConfigError("criterion must be D or A, got '" + crit + "'");
    cfg.criterion = crit == "D" ? Criterion::D : Criterion::A;

    if (j.contains("preset")) {
      cfg = preset(j["preset"], cfg.criterion);
    } else {
      cfg.model = model_from_json(j.at("model"));
      cfg.region = region_from_json(j.at("region"));
    }
    cfg.solve.criterion = cfg.criterion;
    if (j.contains("solve")) {
      const json& s = j["solve"];
      cfg.solve.max_iters = s.value("max_iters", cfg.solve.max_iters);
      cfg.solve.l1_tol = s.value("l1_tol", cfg.solve.l1_tol);
      cfg.solve.cert_tol = s.value("cert_tol", cfg.solve.cert_tol);
      cfg.solve.record_history =
          s.value("record_history", cfg.solve.record_history);
      if (s.contains("monotonicity_action")) {
        const std::string a = s["monotonicity_action"];
        if (a != "fail" && a != "warn")
          throw ConfigError("monotonicity_action must be fail or warn");
        cfg.solve.monotonicity_action =
            a == "fail" ? MonotonicityAction::Fail : MonotonicityAction::Warn;
        cfg.solve.monotonicity_action_set = true;
      }
    }
    cfg.out_dir = j.value("out_dir", cfg.out_dir);
    if (j.contains("emit")) {
      cfg.emit = EmitFlags{false, false, false, false};
      for (const std::string e : j["emit"]) {
        if (e == "report")
          cfg.emit.report = true;
        else if (e == "history")
          cfg.emit.history = true;
        else if (e == "density")
          cfg.emit.density = true;
        else if (e == "support")
          cfg.emit.support = true;
        else
          throw ConfigError("unknown emit flag '" + e + "'");
      }
    }
    cfg.threads = j.value("threads", 1);
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error: ") + e.what());
  }
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

}  // namespace optdes
