#include "optdes/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

namespace optdes {

DiscBands disc_band_masses(const DesignDensity& f, const QuadratureGrid& grid,
                           double mass_floor) {
  if (!grid.polar) throw Error("disc_band_masses requires a polar grid");
  const auto& pol = *grid.polar;
  std::vector<double> ring_mass(pol.n_r, 0.0);
  for (int k = 0; k < pol.n_r; ++k)
    for (int l = 0; l < pol.n_theta; ++l) {
      const long i = pol.node_index(k, l);
      ring_mass[k] += f.values[i] * grid.measures[i];
    }
  const double peak = *std::max_element(ring_mass.begin(), ring_mass.end());
  const double threshold = mass_floor * peak;

  DiscBands bands;
  for (int k = 0; k < pol.n_r && ring_mass[k] >= threshold; ++k) {
    bands.center_mass += ring_mass[k];
    ++bands.center_rings;
  }
  for (int k = pol.n_r - 1; k >= 0 && ring_mass[k] >= threshold; --k) {
    if (k < bands.center_rings) break;  // bands would overlap
    bands.boundary_mass += ring_mass[k];
    ++bands.boundary_rings;
  }
  return bands;
}

namespace {

std::string point_str(const std::vector<double>& loc) {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < loc.size(); ++j) {
    if (j) os << ", ";
    os << loc[j];
  }
  os << ")";
  return os.str();
}

}  // namespace

RunComparison compare_to_targets(const PresetTargets& targets,
                                 const RunResult& result,
                                 const QuadratureGrid& grid) {
  RunComparison cmp;
  cmp.tolerance = targets.tolerance;
  const auto& support = result.report.support;

  switch (targets.kind) {
    case PresetTargets::Kind::None:
      return cmp;

    case PresetTargets::Kind::WeightTable: {
      cmp.applicable = true;
      if (support.size() != targets.weights.size()) {
        cmp.passed = false;
        cmp.notes.push_back("expected " +
                            std::to_string(targets.weights.size()) +
                            " support points, found " +
                            std::to_string(support.size()));
      }
      for (const auto& entry : targets.weights) {
        // nearest extracted cluster
        double best_d2 = std::numeric_limits<double>::infinity();
        const SupportPoint* best = nullptr;
        for (const auto& sp : support) {
          double d2 = 0.0;
          for (int j = 0; j < grid.dimension; ++j)
            d2 += (sp.location[j] - entry.location[j]) *
                  (sp.location[j] - entry.location[j]);
          if (d2 < best_d2) {
            best_d2 = d2;
            best = &sp;
          }
        }
        ComparisonRow row;
        row.location = entry.location;
        row.theoretical = entry.weight;
        row.computed = best ? best->weight : 0.0;
        row.deviation = std::abs(row.computed - row.theoretical);
        cmp.max_deviation = std::max(cmp.max_deviation, row.deviation);
        cmp.rows.push_back(std::move(row));
      }
      if (cmp.max_deviation > targets.tolerance) cmp.passed = false;
      return cmp;
    }

    case PresetTargets::Kind::DiscCenterRing: {
      cmp.applicable = true;
      DiscBands bands = disc_band_masses(result.report.final_density, grid);
      ComparisonRow center{{0.0, 0.0}, bands.center_mass, targets.center_weight,
                           std::abs(bands.center_mass - targets.center_weight)};
      ComparisonRow ring{{}, bands.boundary_mass, targets.ring_weight,
                         std::abs(bands.boundary_mass - targets.ring_weight)};
      cmp.max_deviation = std::max(center.deviation, ring.deviation);
      cmp.rows.push_back(std::move(center));
      cmp.rows.push_back(std::move(ring));
      if (cmp.max_deviation > targets.tolerance) cmp.passed = false;
      const double dev = ring_uniformity(result.report.final_density, grid,
                                         targets.ring_sectors);
      cmp.notes.push_back("ring uniformity over " +
                          std::to_string(targets.ring_sectors) +
                          " sectors: max relative deviation " +
                          std::to_string(dev));
      if (dev > targets.ring_deviation_tol) cmp.passed = false;
      return cmp;
    }

    case PresetTargets::Kind::DiscBoundaryOnly: {
      cmp.applicable = true;
      DiscBands bands = disc_band_masses(result.report.final_density, grid);
      cmp.notes.push_back("boundary band mass: " +
                          std::to_string(bands.boundary_mass));
      if (bands.boundary_mass < targets.min_boundary_mass) cmp.passed = false;
      const double dev = ring_uniformity(result.report.final_density, grid,
                                         targets.ring_sectors);
      cmp.notes.push_back("ring uniformity over " +
                          std::to_string(targets.ring_sectors) +
                          " sectors: max relative deviation " +
                          std::to_string(dev));
      if (dev > targets.ring_deviation_tol) cmp.passed = false;
      return cmp;
    }
  }
  return cmp;
}

RunResult execute(const RunConfig& cfg) {
  RunResult result;
  result.config = cfg;

  const ModelSpec model = cfg.model.build();
  const QuadratureGrid grid = cfg.region.build();

  SolveOptions opts = cfg.solve;
  opts.criterion = cfg.criterion;
  result.report = solve(model, grid, opts);

  result.certificate =
      certify(result.report.final_density, grid, model, cfg.criterion);
  auto [support, residual] = extract_support(result.report.final_density, grid);
  result.report.support = std::move(support);
  result.report.residual_mass = residual;

  result.comparison = compare_to_targets(cfg.targets, result, grid);
  return result;
}

namespace {

const char* reason_str(TerminationReason r) {
  switch (r) {
    case TerminationReason::CertTol:
      return "certificate gap below tolerance";
    case TerminationReason::L1Tol:
      return "L1 step below tolerance";
    case TerminationReason::MaxIters:
      return "iteration limit reached";
    case TerminationReason::MonotonicityViolation:
      return "monotonicity violation";
  }
  return "?";
}

}  // namespace

std::string format_report(const RunResult& result) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "== configuration ==\n" << config_to_json(result.config) << "\n\n";

  const auto& rep = result.report;
  os << "== termination ==\n";
  os << "iterations:        " << rep.iterations << "\n";
  os << "reason:            " << reason_str(rep.termination_reason) << "\n";
  os << "converged:         " << (rep.converged ? "yes" : "no") << "\n";
  os << "criterion value:   " << rep.final_value << "\n";
  if (result.config.criterion == Criterion::A)
    os << "A-monotonicity violations: " << rep.a_monotonicity_violations
       << "\n";

  const auto& cert = result.certificate;
  os << "\n== certificate (grid-relative) ==\n";
  os << "criterion:         " << (cert.criterion == Criterion::D ? "D" : "A")
     << "\n";
  os << "sensitivity max:   " << cert.sensitivity_max << "\n";
  os << "bound:             " << cert.bound << "\n";
  os << "gap:               " << cert.gap << "\n";
  os << "argmax node:       (";
  for (int j = 0; j < cert.argmax_node.size(); ++j)
    os << (j ? ", " : "") << cert.argmax_node[j];
  os << ")\n";

  os << "\n== support points ==\n";
  for (const auto& sp : rep.support) {
    os << "  (";
    for (int j = 0; j < sp.location.size(); ++j)
      os << (j ? ", " : "") << std::setw(8) << sp.location[j];
    os << ")  weight " << std::setw(12) << sp.weight << "  cells "
       << sp.n_cells << "  peak " << sp.peak_density << "\n";
  }
  os << "  residual mass: " << rep.residual_mass << "\n";

  if (result.comparison.applicable) {
    const auto& cmp = result.comparison;
    os << "\n== comparison against reference weights ==\n";
    for (const auto& row : cmp.rows) {
      os << "  " << (row.location.empty() ? "boundary ring"
                                          : point_str(row.location))
         << "  computed " << row.computed << "  reference " << row.theoretical
         << "  |dev| " << row.deviation << "\n";
    }
    for (const auto& n : cmp.notes) os << "  " << n << "\n";
    os << "  max deviation " << cmp.max_deviation << " (tolerance "
       << cmp.tolerance << ") -> " << (cmp.passed ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

int run(const RunConfig& cfg, std::ostream& log) {
  RunResult result = execute(cfg);

  const std::filesystem::path out_dir(cfg.out_dir);
  const ModelSpec model = cfg.model.build();
  const QuadratureGrid grid = cfg.region.build();

  if (cfg.emit.report) {
    std::filesystem::create_directories(out_dir);
    std::ofstream f(out_dir / "report.txt");
    f << format_report(result);
  }
  if (cfg.emit.history)
    emit_history_csv(result.report.history, out_dir / "history.csv");
  if (cfg.emit.density)
    emit_density_csv(result.report.final_density, grid,
                     out_dir / "density.csv");
  if (cfg.emit.support)
    emit_support_csv(result.report.support, result.report.residual_mass,
                     grid.dimension, out_dir / "support.csv");

  log << format_report(result);
  if (!result.report.converged) return 3;
  if (result.comparison.applicable && !result.comparison.passed) return 1;
  return 0;
}

}  // namespace optdes
