#ifndef OPTDES_PRESETS_HPP
#define OPTDES_PRESETS_HPP

#include <string>
#include <vector>

#include "optdes/solver.hpp"

namespace optdes {

struct ModelConfig {
  enum class Kind { FullQuadratic, LinearNoIntercept, Custom };
  Kind kind = Kind::FullQuadratic;
  int dimension = 1;
  std::vector<std::vector<int>> exponents;  // Custom only

  ModelSpec build() const;
  bool operator==(const ModelConfig&) const = default;
};

struct RegionConfig {
  enum class Kind { Box, Disc };
  Kind kind = Kind::Box;
  // Box
  std::vector<std::pair<double, double>> intervals;
  int n_per_dim = 41;
  bool closed = false;  // endpoint-including grid (used by box presets)
  // Disc
  double center_x = 0.0, center_y = 0.0;
  double radius = 1.0;
  int n_r = 80, n_theta = 160;

  QuadratureGrid build(long node_cap = kDefaultNodeCap) const;
  bool operator==(const RegionConfig&) const = default;
};

struct EmitFlags {
  bool report = true;
  bool history = false;
  bool density = false;
  bool support = true;
  bool operator==(const EmitFlags&) const = default;
};

/// Reference weights for a preset run: either a table of (location, weight)
/// targets, or the disc-specific center/ring split, or the qualitative
/// boundary-concentration check.
struct PresetTargets {
  enum class Kind { None, WeightTable, DiscCenterRing, DiscBoundaryOnly };
  Kind kind = Kind::None;
  double tolerance = 0.0;

  struct Entry {
    std::vector<double> location;
    double weight;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> weights;  // WeightTable

  double center_weight = 0.0;  // DiscCenterRing
  double ring_weight = 0.0;

  int ring_sectors = 0;  // disc kinds: sector count and allowed deviation
  double ring_deviation_tol = 0.0;
  double min_boundary_mass = 0.0;  // DiscBoundaryOnly

  bool operator==(const PresetTargets&) const = default;
};

struct RunConfig {
  ModelConfig model;
  RegionConfig region;
  Criterion criterion = Criterion::D;
  SolveOptions solve;
  std::string out_dir = "out";
  EmitFlags emit;
  int threads = 1;

  std::string preset_name;  // empty for non-preset runs
  PresetTargets targets;

  bool operator==(const RunConfig&) const = default;
};

/// The four worked settings with default resolutions and embedded
/// reference weights.  Valid names: setting1 .. setting4.
RunConfig preset(const std::string& name, Criterion criterion);

std::vector<std::string> preset_names();

}  // namespace optdes

#endif  // OPTDES_PRESETS_HPP
