#ifndef OPTDES_GRID_HPP
#define OPTDES_GRID_HPP

#include <Eigen/Core>
#include <optional>
#include <utility>
#include <vector>

#include "optdes/errors.hpp"

namespace optdes {

/// A continuous design region: an axis-aligned box or a planar disc.
struct Region {
  enum class Kind { Box, Disc };
  Kind kind = Kind::Box;

  // Box
  std::vector<std::pair<double, double>> intervals;  // [a_j, b_j] per dimension

  // Disc
  Eigen::Vector2d center{0.0, 0.0};
  double radius = 1.0;

  static Region box(std::vector<std::pair<double, double>> intervals);
  static Region disc(Eigen::Vector2d center, double radius);

  int dimension() const;
};

/// Analytic volume of the region (box: product of edge lengths; disc: pi r^2).
double region_volume(const Region& region);

inline constexpr long kDefaultNodeCap = 2'000'000;

/// Quadrature discretization of a region: nodes w_i with positive cell
/// measures mu_i so that integrals over E become sums  sum_i g(w_i) mu_i.
/// Immutable after construction.
struct QuadratureGrid {
  int dimension = 0;
  Eigen::MatrixXd nodes;     // N x d, one row per node
  Eigen::VectorXd measures;  // N, all > 0
  std::vector<std::vector<int>> adjacency;  // neighbor indices per node
  double total_measure = 0.0;

  // Set only for polar disc grids; ring/sector bookkeeping for
  // ring_uniformity and the disc presets.
  struct PolarInfo {
    Eigen::Vector2d center;
    double radius;
    int n_r;
    int n_theta;
    // node index of ring k, angular cell l
    int node_index(int k, int l) const { return k * n_theta + l; }
  };
  std::optional<PolarInfo> polar;

  long size() const { return nodes.rows(); }
};

/// Tensor grid of cell-centered nodes, n_per_dim per dimension.
/// mu_i is the cell volume; nodes are strictly interior.
QuadratureGrid grid_box(const std::vector<std::pair<double, double>>& intervals,
                        int n_per_dim, long node_cap = kDefaultNodeCap);

/// Tensor grid whose nodes include the interval endpoints (n_per_dim >= 2
/// equispaced levels per dimension); measures are the Voronoi cell volumes,
/// so boundary cells carry half-width cells and the total is still exact.
/// Used by the box presets, where the optimal mass sits on the boundary
/// itself and weight targets are sensitive to the support location.
QuadratureGrid grid_box_closed(
    const std::vector<std::pair<double, double>>& intervals, int n_per_dim,
    long node_cap = kDefaultNodeCap);

/// Polar tensor grid on a disc: cell-centered radii and angles,
/// mu = r_k * dr * dtheta.  Total measure is pi r^2 up to roundoff.
QuadratureGrid grid_disc(const Eigen::Vector2d& center, double radius, int n_r,
                         int n_theta, long node_cap = kDefaultNodeCap);

}  // namespace optdes

#endif  // OPTDES_GRID_HPP
