#ifndef OPTDES_RUN_HPP
#define OPTDES_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "optdes/io.hpp"
#include "optdes/presets.hpp"

namespace optdes {

/// Integrated mass of the contiguous occupied radial bands at the center
/// and at the rim of a polar disc grid.
struct DiscBands {
  double center_mass = 0.0;
  double boundary_mass = 0.0;
  int center_rings = 0;
  int boundary_rings = 0;
};

DiscBands disc_band_masses(const DesignDensity& f, const QuadratureGrid& grid,
                           double mass_floor = 1e-4);

struct ComparisonRow {
  std::vector<double> location;
  double computed = 0.0;
  double theoretical = 0.0;
  double deviation = 0.0;
};

struct RunComparison {
  bool applicable = false;
  bool passed = true;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::vector<ComparisonRow> rows;
  std::vector<std::string> notes;
};

struct RunResult {
  RunConfig config;
  SolveReport report;
  Certificate certificate;
  RunComparison comparison;
};

/// solve -> certify -> extract_support -> compare against preset targets.
RunResult execute(const RunConfig& cfg);

RunComparison compare_to_targets(const PresetTargets& targets,
                                 const RunResult& result,
                                 const QuadratureGrid& grid);

std::string format_report(const RunResult& result);

/// Full CLI-run semantics: execute, write requested artifacts under
/// cfg.out_dir, print the report to `log`.  Returns the process exit
/// status (nonzero when a preset comparison fails).
int run(const RunConfig& cfg, std::ostream& log);

}  // namespace optdes

#endif  // OPTDES_RUN_HPP
