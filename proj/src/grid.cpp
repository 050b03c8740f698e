#include "optdes/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace optdes {

Region Region::box(std::vector<std::pair<double, double>> intervals) {
  Region r;
  r.kind = Kind::Box;
  if (intervals.empty()) throw Error("box region needs at least one interval");
  for (const auto& [a, b] : intervals) {
    if (!(a < b))
      throw Error("box interval must satisfy a < b, got [" +
                  std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  r.intervals = std::move(intervals);
  return r;
}

Region Region::disc(Eigen::Vector2d center, double radius) {
  if (!(radius > 0.0)) throw Error("disc radius must be positive");
  Region r;
  r.kind = Kind::Disc;
  r.center = center;
  r.radius = radius;
  return r;
}

int Region::dimension() const {
  return kind == Kind::Box ? static_cast<int>(intervals.size()) : 2;
}

double region_volume(const Region& region) {
  if (region.kind == Region::Kind::Box) {
    double v = 1.0;
    for (const auto& [a, b] : region.intervals) v *= (b - a);
    return v;
  }
  return std::numbers::pi * region.radius * region.radius;
}

namespace {

void check_cap(long n, long cap) {
  if (n > cap)
    throw GridTooLarge("grid would have " + std::to_string(n) +
                       " nodes, cap is " + std::to_string(cap));
}

// Shared tensor-product assembly.  level_coords[j] and level_weights[j]
// are the per-dimension node coordinates and 1-D cell measures.
QuadratureGrid assemble_tensor(
    const std::vector<std::vector<double>>& level_coords,
    const std::vector<std::vector<double>>& level_weights) {
  const int d = static_cast<int>(level_coords.size());
  long n_total = 1;
  std::vector<int> n_per(d);
  for (int j = 0; j < d; ++j) {
    n_per[j] = static_cast<int>(level_coords[j].size());
    n_total *= n_per[j];
  }

  QuadratureGrid g;
  g.dimension = d;
  g.nodes.resize(n_total, d);
  g.measures.resize(n_total);
  g.adjacency.resize(n_total);

  std::vector<int> idx(d, 0);
  // row-major enumeration: last index fastest
  for (long i = 0; i < n_total; ++i) {
    double mu = 1.0;
    for (int j = 0; j < d; ++j) {
      g.nodes(i, j) = level_coords[j][idx[j]];
      mu *= level_weights[j][idx[j]];
    }
    g.measures[i] = mu;

    long stride = 1;
    for (int j = d - 1; j >= 0; --j) {
      if (idx[j] > 0) g.adjacency[i].push_back(static_cast<int>(i - stride));
      if (idx[j] + 1 < n_per[j])
        g.adjacency[i].push_back(static_cast<int>(i + stride));
      stride *= n_per[j];
    }

    for (int j = d - 1; j >= 0; --j) {
      if (++idx[j] < n_per[j]) break;
      idx[j] = 0;
    }
  }
  g.total_measure = g.measures.sum();
  return g;
}

}  // namespace

QuadratureGrid grid_box(const std::vector<std::pair<double, double>>& intervals,
                        int n_per_dim, long node_cap) {
  if (n_per_dim < 2)
    throw GridTooSmall("grid_box needs n_per_dim >= 2, got " +
                       std::to_string(n_per_dim));
  const Region region = Region::box(intervals);
  const int d = region.dimension();
  long n_total = 1;
  for (int j = 0; j < d; ++j) n_total *= n_per_dim;
  check_cap(n_total, node_cap);

  std::vector<std::vector<double>> coords(d), weights(d);
  for (int j = 0; j < d; ++j) {
    const auto [a, b] = intervals[j];
    const double h = (b - a) / n_per_dim;
    for (int i = 0; i < n_per_dim; ++i) {
      coords[j].push_back(a + (i + 0.5) * h);
      weights[j].push_back(h);
    }
  }
  return assemble_tensor(coords, weights);
}

QuadratureGrid grid_box_closed(
    const std::vector<std::pair<double, double>>& intervals, int n_per_dim,
    long node_cap) {
  if (n_per_dim < 2)
    throw GridTooSmall("grid_box_closed needs n_per_dim >= 2, got " +
                       std::to_string(n_per_dim));
  const Region region = Region::box(intervals);
  const int d = region.dimension();
  long n_total = 1;
  for (int j = 0; j < d; ++j) n_total *= n_per_dim;
  check_cap(n_total, node_cap);

  std::vector<std::vector<double>> coords(d), weights(d);
  for (int j = 0; j < d; ++j) {
    const auto [a, b] = intervals[j];
    const double h = (b - a) / (n_per_dim - 1);
    for (int i = 0; i < n_per_dim; ++i) {
      coords[j].push_back(a + i * h);
      weights[j].push_back((i == 0 || i == n_per_dim - 1) ? h / 2 : h);
    }
    coords[j].back() = b;  // avoid roundoff drift at the far endpoint
  }
  return assemble_tensor(coords, weights);
}

QuadratureGrid grid_disc(const Eigen::Vector2d& center, double radius, int n_r,
                         int n_theta, long node_cap) {
  if (n_r < 2 || n_theta < 4)
    throw GridTooSmall("grid_disc needs n_r >= 2 and n_theta >= 4");
  if (!(radius > 0.0)) throw Error("disc radius must be positive");
  const long n_total = static_cast<long>(n_r) * n_theta;
  check_cap(n_total, node_cap);

  QuadratureGrid g;
  g.dimension = 2;
  g.nodes.resize(n_total, 2);
  g.measures.resize(n_total);
  g.adjacency.resize(n_total);
  const double dr = radius / n_r;
  const double dtheta = 2.0 * std::numbers::pi / n_theta;

  for (int k = 0; k < n_r; ++k) {
    const double r = (k + 0.5) * dr;
    for (int l = 0; l < n_theta; ++l) {
      const double th = (l + 0.5) * dtheta;
      const long i = static_cast<long>(k) * n_theta + l;
      g.nodes(i, 0) = center[0] + r * std::cos(th);
      g.nodes(i, 1) = center[1] + r * std::sin(th);
      g.measures[i] = r * dr * dtheta;  // exact polar cell area
      auto& adj = g.adjacency[i];
      if (k > 0) adj.push_back(static_cast<int>(i - n_theta));
      if (k + 1 < n_r) adj.push_back(static_cast<int>(i + n_theta));
      adj.push_back(static_cast<int>(k * static_cast<long>(n_theta) +
                                     (l + n_theta - 1) % n_theta));
      adj.push_back(
          static_cast<int>(k * static_cast<long>(n_theta) + (l + 1) % n_theta));
    }
  }
  g.total_measure = g.measures.sum();
  g.polar = QuadratureGrid::PolarInfo{center, radius, n_r, n_theta};
  return g;
}

}  // namespace optdes
