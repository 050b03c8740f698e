#include "optdes/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace optdes {

Certificate certify(const DesignDensity& f, const QuadratureGrid& grid,
                    const ModelSpec& model, Criterion criterion) {
  Eigen::MatrixXd x = regressor_matrix(model, grid);
  InfoMatrix info(f, grid, x);
  Eigen::VectorXd sens = criterion == Criterion::D ? d_sensitivity(info, x)
                                                   : a_sensitivity(info, x);
  Certificate cert;
  cert.criterion = criterion;
  cert.bound = criterion == Criterion::D ? static_cast<double>(info.p()) : 1.0;
  Eigen::Index argmax = 0;
  cert.sensitivity_max = sens.maxCoeff(&argmax);
  cert.gap = cert.sensitivity_max - cert.bound;
  cert.argmax_node = grid.nodes.row(argmax).transpose();
  return cert;
}

std::pair<std::vector<SupportPoint>, double> extract_support(
    const DesignDensity& f, const QuadratureGrid& grid, double mass_floor) {
  const long n = grid.size();
  Eigen::VectorXd cell_mass = f.values.array() * grid.measures.array();
  const double threshold = mass_floor * cell_mass.maxCoeff();

  std::vector<char> active(n), visited(n, 0);
  for (long i = 0; i < n; ++i) active[i] = cell_mass[i] >= threshold;

  std::vector<SupportPoint> points;
  std::vector<long> stack;
  for (long seed = 0; seed < n; ++seed) {
    if (!active[seed] || visited[seed]) continue;
    // flood fill one cluster
    SupportPoint sp;
    sp.location = Eigen::VectorXd::Zero(grid.dimension);
    stack.assign(1, seed);
    visited[seed] = 1;
    while (!stack.empty()) {
      const long i = stack.back();
      stack.pop_back();
      sp.weight += cell_mass[i];
      sp.location += cell_mass[i] * grid.nodes.row(i).transpose();
      sp.n_cells += 1;
      sp.peak_density = std::max(sp.peak_density, f.values[i]);
      for (int j : grid.adjacency[i]) {
        if (active[j] && !visited[j]) {
          visited[j] = 1;
          stack.push_back(j);
        }
      }
    }
    sp.location /= sp.weight;
    points.push_back(std::move(sp));
  }

  std::stable_sort(points.begin(), points.end(),
                   [](const SupportPoint& a, const SupportPoint& b) {
                     return a.weight > b.weight;
                   });
  double covered = 0.0;
  for (const auto& sp : points) covered += sp.weight;
  return {std::move(points), 1.0 - covered};
}

double ring_uniformity(const DesignDensity& f, const QuadratureGrid& grid,
                       int n_sectors) {
  if (!grid.polar) throw Error("ring_uniformity requires a polar disc grid");
  if (n_sectors < 2) throw Error("ring_uniformity needs at least 2 sectors");
  const auto& pol = *grid.polar;

  Eigen::VectorXd cell_mass = f.values.array() * grid.measures.array();
  const double total = cell_mass.sum();

  // ring masses; the outermost occupied band is the largest-index ring
  // carrying a non-negligible share of the peak ring mass
  std::vector<double> ring_mass(pol.n_r, 0.0);
  for (int k = 0; k < pol.n_r; ++k)
    for (int l = 0; l < pol.n_theta; ++l)
      ring_mass[k] += cell_mass[pol.node_index(k, l)];
  const double peak = *std::max_element(ring_mass.begin(), ring_mass.end());
  int band = -1;
  for (int k = pol.n_r - 1; k >= 0; --k) {
    if (ring_mass[k] >= 1e-3 * peak) {
      band = k;
      break;
    }
  }
  if (band < 0 || ring_mass[band] < 0.01 * total)
    throw DegenerateRing("outermost occupied band carries less than 1% of mass");

  // apportion each angular cell's mass across sectors by overlap
  const double dtheta = 2.0 * std::numbers::pi / pol.n_theta;
  const double sector_width = 2.0 * std::numbers::pi / n_sectors;
  std::vector<double> sector_mass(n_sectors, 0.0);
  for (int l = 0; l < pol.n_theta; ++l) {
    const double m = cell_mass[pol.node_index(band, l)];
    const double lo = l * dtheta;
    const double hi = lo + dtheta;
    int s = static_cast<int>(lo / sector_width);
    double a = lo;
    while (a < hi - 1e-15) {
      const double b = std::min(hi, (s + 1) * sector_width);
      sector_mass[s % n_sectors] += m * (b - a) / dtheta;
      a = b;
      ++s;
    }
  }

  const double mean = ring_mass[band] / n_sectors;
  double dev = 0.0;
  for (double s : sector_mass) dev = std::max(dev, std::abs(s - mean) / mean);
  return dev;
}

}  // namespace optdes
