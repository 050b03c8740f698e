#include "optdes/presets.hpp"

#include <cmath>

namespace optdes {

ModelSpec ModelConfig::build() const {
  switch (kind) {
    case Kind::FullQuadratic:
      return full_quadratic_basis(dimension);
    case Kind::LinearNoIntercept:
      return linear_basis_no_intercept(dimension);
    case Kind::Custom: {
      std::vector<MonomialTerm> terms;
      for (const auto& e : exponents) terms.push_back(MonomialTerm{e});
      return ModelSpec(dimension, std::move(terms));
    }
  }
  throw Error("unreachable");
}

QuadratureGrid RegionConfig::build(long node_cap) const {
  if (kind == Kind::Box)
    return closed ? grid_box_closed(intervals, n_per_dim, node_cap)
                  : grid_box(intervals, n_per_dim, node_cap);
  return grid_disc(Eigen::Vector2d(center_x, center_y), radius, n_r, n_theta,
                   node_cap);
}

namespace {

RegionConfig unit_disc() {
  RegionConfig r;
  r.kind = RegionConfig::Kind::Disc;
  r.radius = 1.0;
  r.n_r = 80;
  r.n_theta = 160;
  return r;
}

RegionConfig unit_box(int d, int n) {
  RegionConfig r;
  r.kind = RegionConfig::Kind::Box;
  r.intervals.assign(d, {-1.0, 1.0});
  r.n_per_dim = n;
  r.closed = true;  // weight targets live on the boundary itself
  return r;
}

// weights per symmetry class keyed by the count of nonzero coordinates
PresetTargets box_table(int d, const std::vector<double>& class_weights,
                        double tol) {
  PresetTargets t;
  t.kind = PresetTargets::Kind::WeightTable;
  t.tolerance = tol;
  std::vector<std::vector<double>> pts;
  std::vector<double> cur(d);
  // enumerate {-1,0,1}^d
  const int total = static_cast<int>(std::pow(3, d));
  for (int idx = 0; idx < total; ++idx) {
    int v = idx, nz = 0;
    for (int j = 0; j < d; ++j) {
      cur[j] = static_cast<double>(v % 3 - 1);
      if (cur[j] != 0.0) ++nz;
      v /= 3;
    }
    t.weights.push_back({cur, class_weights[nz]});
  }
  return t;
}

}  // namespace

RunConfig preset(const std::string& name, Criterion criterion) {
  RunConfig cfg;
  cfg.criterion = criterion;
  cfg.solve.criterion = criterion;
  cfg.preset_name = name;

  if (name == "setting1") {
    cfg.model = {ModelConfig::Kind::LinearNoIntercept, 2, {}};
    cfg.region = unit_disc();
    if (criterion == Criterion::D) {
      cfg.targets.kind = PresetTargets::Kind::DiscBoundaryOnly;
      cfg.targets.min_boundary_mass = 0.99;
      cfg.targets.ring_sectors = 8;
      cfg.targets.ring_deviation_tol = 0.01;
    }
  } else if (name == "setting2") {
    cfg.model = {ModelConfig::Kind::FullQuadratic, 2, {}};
    cfg.region = unit_disc();
    cfg.solve.max_iters = 20000;  // the disc run needs ~9e3 iterations
    if (criterion == Criterion::D) {
      cfg.targets.kind = PresetTargets::Kind::DiscCenterRing;
      cfg.targets.tolerance = 0.01;
      cfg.targets.center_weight = 1.0 / 6.0;
      cfg.targets.ring_weight = 5.0 / 6.0;
      cfg.targets.ring_sectors = 12;
      cfg.targets.ring_deviation_tol = 0.02;
    }
  } else if (name == "setting3") {
    cfg.model = {ModelConfig::Kind::FullQuadratic, 2, {}};
    cfg.region = unit_box(2, 41);
    cfg.targets = criterion == Criterion::D
                      ? box_table(2, {0.0960, 0.0803, 0.1457}, 0.002)
                      : box_table(2, {0.2332, 0.0978, 0.0940}, 0.002);
  } else if (name == "setting4") {
    cfg.model = {ModelConfig::Kind::FullQuadratic, 3, {}};
    cfg.region = unit_box(3, 21);
    cfg.targets = criterion == Criterion::D
                      ? box_table(3, {0.0290, 0.0183, 0.0262, 0.0684}, 0.003)
                      : box_table(3, {0.1096, 0.0430, 0.0259, 0.0402}, 0.003);
  } else {
    throw UnknownPreset("unknown preset '" + name +
                        "'; valid: setting1 setting2 setting3 setting4");
  }
  return cfg;
}

std::vector<std::string> preset_names() {
  return {"setting1", "setting2", "setting3", "setting4"};
}

}  // namespace optdes
