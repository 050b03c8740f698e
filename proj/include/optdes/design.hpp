#ifndef OPTDES_DESIGN_HPP
#define OPTDES_DESIGN_HPP

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "optdes/grid.hpp"
#include "optdes/model.hpp"

namespace optdes {

enum class Criterion { D, A };

/// Nonnegative density values f_i aligned with the grid nodes,
/// normalized so that sum_i f_i mu_i = 1.
struct DesignDensity {
  Eigen::VectorXd values;

  double mass(const QuadratureGrid& grid) const {
    return (values.array() * grid.measures.array()).sum();
  }
};

/// f = 1 / |E| everywhere (normalized version of the flat start).
DesignDensity uniform_density(const QuadratureGrid& grid);

/// Regressor values at every grid node, one row per node.  Computed once
/// per (model, grid) pair and shared by all criterion evaluations.
Eigen::MatrixXd regressor_matrix(const ModelSpec& model,
                                 const QuadratureGrid& grid);

/// Information matrix M(f) = sum_i f_i mu_i x(w_i) x(w_i)^T with a cached
/// SPD factorization.  Throws SingularInformation when the smallest
/// eigenvalue falls below 1e-12 times the largest.
class InfoMatrix {
 public:
  InfoMatrix(const DesignDensity& f, const QuadratureGrid& grid,
             const Eigen::MatrixXd& regressors);

  const Eigen::MatrixXd& m() const { return m_; }
  const Eigen::LLT<Eigen::MatrixXd>& factorization() const { return llt_; }
  double log_det() const { return log_det_; }
  double inv_trace() const { return inv_trace_; }
  int p() const { return static_cast<int>(m_.rows()); }

 private:
  Eigen::MatrixXd m_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  double log_det_;
  double inv_trace_;
};

InfoMatrix info_matrix(const DesignDensity& f, const QuadratureGrid& grid,
                       const ModelSpec& model);

/// phi_i = x(w_i)^T M^{-1} x(w_i), via triangular solves on the
/// factorization.  Identity: sum_i f_i mu_i phi_i = p.
Eigen::VectorXd d_sensitivity(const InfoMatrix& info,
                              const Eigen::MatrixXd& regressors);
Eigen::VectorXd d_sensitivity(const DesignDensity& f,
                              const QuadratureGrid& grid,
                              const ModelSpec& model);

/// psi_i = ||M^{-1} x(w_i)||^2 / tr(M^{-1}).
/// Identity: sum_i f_i mu_i psi_i = 1.
Eigen::VectorXd a_sensitivity(const InfoMatrix& info,
                              const Eigen::MatrixXd& regressors);
Eigen::VectorXd a_sensitivity(const DesignDensity& f,
                              const QuadratureGrid& grid,
                              const ModelSpec& model);

/// D: -log det M(f);  A: tr(M(f)^{-1}).  Both are minimized.
double criterion_value(Criterion kind, const DesignDensity& f,
                       const QuadratureGrid& grid, const ModelSpec& model);
double criterion_value(Criterion kind, const InfoMatrix& info);

}  // namespace optdes

#endif  // OPTDES_DESIGN_HPP
