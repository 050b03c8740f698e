#ifndef OPTDES_CERTIFY_HPP
#define OPTDES_CERTIFY_HPP

#include <utility>
#include <vector>

#include "optdes/design.hpp"

namespace optdes {

/// Equivalence-theorem certificate.  The bound is p for D and 1 for A;
/// gap = sensitivity_max - bound.  The certificate is grid-relative: it
/// bounds suboptimality over the discretized region.
struct Certificate {
  Criterion criterion = Criterion::D;
  double gap = 0.0;
  Eigen::VectorXd argmax_node;
  double bound = 0.0;
  double sensitivity_max = 0.0;
};

Certificate certify(const DesignDensity& f, const QuadratureGrid& grid,
                    const ModelSpec& model, Criterion criterion);

/// One atom of the converged design: a connected cluster of active cells.
struct SupportPoint {
  Eigen::VectorXd location;  // mass-weighted centroid
  double weight = 0.0;       // integrated f * mu over the cluster
  int n_cells = 0;
  double peak_density = 0.0;
};

/// Cells with f_i mu_i >= mass_floor * max_j(f_j mu_j) are grouped into
/// connected components under grid adjacency; clusters are returned sorted
/// by descending weight together with the residual (sub-floor) mass.
std::pair<std::vector<SupportPoint>, double> extract_support(
    const DesignDensity& f, const QuadratureGrid& grid,
    double mass_floor = 1e-4);

/// Max relative deviation of sector masses over the outermost occupied
/// radial band of a polar grid, with cell mass apportioned to equal-angle
/// sectors by angular overlap.  Throws DegenerateRing when the band
/// carries less than 1% of the total mass.
double ring_uniformity(const DesignDensity& f, const QuadratureGrid& grid,
                       int n_sectors);

}  // namespace optdes

#endif  // OPTDES_CERTIFY_HPP
