#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "optdes/run.hpp"

namespace {

using namespace optdes;

struct CommonFlags {
  std::string preset_name;
  std::string criterion = "D";
  std::string config_path;
  std::string out_dir;
  int max_iters = -1;
  double cert_tol = -1.0;
  double l1_tol = -1.0;
  int grid_n = -1;
  int threads = 1;
  std::vector<std::string> emit;
};

void add_common(CLI::App* cmd, CommonFlags& fl) {
  cmd->add_option("--preset", fl.preset_name,
                  "paper preset: setting1 .. setting4");
  cmd->add_option("--criterion", fl.criterion, "optimality criterion")
      ->check(CLI::IsMember({"D", "A"}));
  cmd->add_option("--config", fl.config_path, "JSON config file");
  cmd->add_option("--out", fl.out_dir, "output directory");
  cmd->add_option("--max-iters", fl.max_iters, "iteration limit");
  cmd->add_option("--cert-tol", fl.cert_tol, "certificate gap tolerance");
  cmd->add_option("--l1-tol", fl.l1_tol, "L1 step tolerance");
  cmd->add_option("--grid", fl.grid_n,
                  "grid resolution (box: nodes per dim; disc: radial rings, "
                  "with 2x angular cells)");
  cmd->add_option("--threads", fl.threads,
                  "reserved; the solver is deterministic and sequential");
  cmd->add_option("--emit", fl.emit, "artifacts to write")
      ->check(CLI::IsMember({"report", "history", "density", "support"}));
}

RunConfig build_config(const CommonFlags& fl) {
  const Criterion crit = fl.criterion == "A" ? Criterion::A : Criterion::D;
  RunConfig cfg;
  if (!fl.preset_name.empty() && !fl.config_path.empty())
    throw ConfigError("--preset and --config are mutually exclusive");
  if (!fl.preset_name.empty())
    cfg = preset(fl.preset_name, crit);
  else if (!fl.config_path.empty())
    cfg = load_config(fl.config_path);
  else
    throw ConfigError("one of --preset or --config is required");

  // flags win over the config file
  cfg.criterion = crit;
  cfg.solve.criterion = crit;
  if (fl.max_iters > 0) cfg.solve.max_iters = fl.max_iters;
  if (fl.cert_tol > 0) cfg.solve.cert_tol = fl.cert_tol;
  if (fl.l1_tol > 0) cfg.solve.l1_tol = fl.l1_tol;
  if (fl.grid_n > 0) {
    if (cfg.region.kind == RegionConfig::Kind::Box) {
      cfg.region.n_per_dim = fl.grid_n;
    } else {
      cfg.region.n_r = fl.grid_n;
      cfg.region.n_theta = 2 * fl.grid_n;
    }
  }
  cfg.threads = fl.threads;
  if (!fl.emit.empty()) {
    cfg.emit = EmitFlags{false, false, false, false};
    for (const auto& e : fl.emit) {
      if (e == "report") cfg.emit.report = true;
      if (e == "history") cfg.emit.history = true;
      if (e == "density") cfg.emit.density = true;
      if (e == "support") cfg.emit.support = true;
    }
  }
  if (!fl.out_dir.empty())
    cfg.out_dir = fl.out_dir;
  else if (const char* env = std::getenv("OPTDES_OUT"))
    cfg.out_dir = env;

  if (cfg.model.dimension > 4)
    std::cerr << "optdes: warning: dimension " << cfg.model.dimension
              << " > 4; grid sizes grow quickly\n";
  return cfg;
}

int cmd_solve(const CommonFlags& fl) { return run(build_config(fl), std::cout); }

int cmd_certify(const CommonFlags& fl, const std::string& density_path) {
  RunConfig cfg = build_config(fl);
  const ModelSpec model = cfg.model.build();
  const QuadratureGrid grid = cfg.region.build();
  DesignDensity f = read_density_csv(density_path, grid);

  const double mass = f.mass(grid);
  if (std::abs(mass - 1.0) > 1e-9)
    std::cerr << "optdes: warning: density mass is " << mass
              << ", expected 1\n";

  Certificate cert = certify(f, grid, model, cfg.criterion);
  auto [support, residual] = extract_support(f, grid);
  std::cout << "criterion:       " << (cfg.criterion == Criterion::D ? "D" : "A")
            << "\nsensitivity max: " << cert.sensitivity_max
            << "\nbound:           " << cert.bound
            << "\ngap:             " << cert.gap << "\nargmax node:     (";
  for (int j = 0; j < cert.argmax_node.size(); ++j)
    std::cout << (j ? ", " : "") << cert.argmax_node[j];
  std::cout << ")\nsupport points:  " << support.size()
            << "\nresidual mass:   " << residual << "\n";
  for (const auto& sp : support) {
    std::cout << "  (";
    for (int j = 0; j < sp.location.size(); ++j)
      std::cout << (j ? ", " : "") << sp.location[j];
    std::cout << ")  weight " << sp.weight << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate D-/A-optimal continuous design solver"};
  app.require_subcommand(1);

  CommonFlags solve_flags;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "compute an optimal design");
  add_common(solve_cmd, solve_flags);

  CommonFlags cert_flags;
  std::string density_path;
  CLI::App* cert_cmd =
      app.add_subcommand("certify", "re-certify a density CSV");
  add_common(cert_cmd, cert_flags);
  cert_cmd->add_option("--density", density_path, "density CSV to certify")
      ->required();

  CLI::App* preset_cmd = app.add_subcommand("preset", "preset utilities");
  CLI::App* preset_list = preset_cmd->add_subcommand("list", "list presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve_flags);
    if (cert_cmd->parsed()) return cmd_certify(cert_flags, density_path);
    if (preset_cmd->parsed()) {
      (void)preset_list;
      for (const auto& name : optdes::preset_names())
        std::cout << name << "\n";
      return 0;
    }
  } catch (const optdes::ConfigError& e) {
    std::cerr << "optdes: config error: " << e.what() << "\n";
    return 2;
  } catch (const optdes::Error& e) {
    std::cerr << "optdes: error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
