#include "optdes/design.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace optdes {

DesignDensity uniform_density(const QuadratureGrid& grid) {
  DesignDensity f;
  f.values = Eigen::VectorXd::Constant(grid.size(), 1.0 / grid.total_measure);
  return f;
}

Eigen::MatrixXd regressor_matrix(const ModelSpec& model,
                                 const QuadratureGrid& grid) {
  if (grid.dimension != model.dimension())
    throw DimensionMismatch("grid dimension " + std::to_string(grid.dimension) +
                            " does not match model dimension " +
                            std::to_string(model.dimension()));
  const long n = grid.size();
  Eigen::MatrixXd x(n, model.p());
  for (long i = 0; i < n; ++i)
    x.row(i) = eval_regressor(model, grid.nodes.row(i).transpose()).transpose();
  return x;
}

InfoMatrix::InfoMatrix(const DesignDensity& f, const QuadratureGrid& grid,
                       const Eigen::MatrixXd& regressors) {
  const long n = grid.size();
  const int p = static_cast<int>(regressors.cols());
  if (f.values.size() != n)
    throw DimensionMismatch("density length does not match grid size");

  // Fixed node-index order with Kahan compensation on the lower triangle,
  // so results are bitwise reproducible.
  m_.setZero(p, p);
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(p, p);
  for (long i = 0; i < n; ++i) {
    const double c = f.values[i] * grid.measures[i];
    if (c == 0.0) continue;
    for (int j = 0; j < p; ++j) {
      const double cj = c * regressors(i, j);
      for (int k = j; k < p; ++k) {
        const double term = cj * regressors(i, k);
        const double y = term - comp(k, j);
        const double t = m_(k, j) + y;
        comp(k, j) = (t - m_(k, j)) - y;
        m_(k, j) = t;
      }
    }
  }
  m_.triangularView<Eigen::StrictlyUpper>() =
      m_.triangularView<Eigen::StrictlyLower>().transpose();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m_,
                                                    Eigen::EigenvaluesOnly);
  const double ev_min = es.eigenvalues().minCoeff();
  const double ev_max = es.eigenvalues().maxCoeff();
  if (!(ev_min > 1e-12 * ev_max))
    throw SingularInformation(
        "information matrix is numerically singular (eigenvalue ratio " +
        std::to_string(ev_max > 0 ? ev_min / ev_max : 0.0) +
        "); the regressors do not span R^p on the support of f");

  llt_.compute(m_);
  if (llt_.info() != Eigen::Success)
    throw SingularInformation("Cholesky factorization failed");

  log_det_ = 2.0 * llt_.matrixL().toDenseMatrix().diagonal().array().log().sum();
  // tr(M^{-1}) = ||L^{-1}||_F^2
  Eigen::MatrixXd linv = llt_.matrixL().solve(Eigen::MatrixXd::Identity(p, p));
  inv_trace_ = linv.squaredNorm();
}

InfoMatrix info_matrix(const DesignDensity& f, const QuadratureGrid& grid,
                       const ModelSpec& model) {
  return InfoMatrix(f, grid, regressor_matrix(model, grid));
}

Eigen::VectorXd d_sensitivity(const InfoMatrix& info,
                              const Eigen::MatrixXd& regressors) {
  // phi_i = || L^{-1} x_i ||^2
  Eigen::MatrixXd y =
      info.factorization().matrixL().solve(regressors.transpose());
  return y.colwise().squaredNorm().transpose();
}

Eigen::VectorXd a_sensitivity(const InfoMatrix& info,
                              const Eigen::MatrixXd& regressors) {
  // psi_i = || M^{-1} x_i ||^2 / tr(M^{-1}), two triangular solves per node
  Eigen::MatrixXd y =
      info.factorization().matrixL().solve(regressors.transpose());
  Eigen::MatrixXd z = info.factorization().matrixU().solve(y);
  return z.colwise().squaredNorm().transpose() / info.inv_trace();
}

Eigen::VectorXd d_sensitivity(const DesignDensity& f,
                              const QuadratureGrid& grid,
                              const ModelSpec& model) {
  Eigen::MatrixXd x = regressor_matrix(model, grid);
  return d_sensitivity(InfoMatrix(f, grid, x), x);
}

Eigen::VectorXd a_sensitivity(const DesignDensity& f,
                              const QuadratureGrid& grid,
                              const ModelSpec& model) {
  Eigen::MatrixXd x = regressor_matrix(model, grid);
  return a_sensitivity(InfoMatrix(f, grid, x), x);
}

double criterion_value(Criterion kind, const InfoMatrix& info) {
  return kind == Criterion::D ? -info.log_det() : info.inv_trace();
}

double criterion_value(Criterion kind, const DesignDensity& f,
                       const QuadratureGrid& grid, const ModelSpec& model) {
  return criterion_value(kind, info_matrix(f, grid, model));
}

}  // namespace optdes
