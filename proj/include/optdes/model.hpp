#ifndef OPTDES_MODEL_HPP
#define OPTDES_MODEL_HPP

#include <Eigen/Core>
#include <vector>

#include "optdes/errors.hpp"

namespace optdes {

/// One monomial w_1^{e_1} * ... * w_d^{e_d} of the regressor vector.
struct MonomialTerm {
  std::vector<int> exponents;  // one nonnegative entry per design-space dimension

  int total_degree() const;
  bool operator==(const MonomialTerm&) const = default;
};

/// Regression model basis: an ordered list of distinct monomials in d variables.
/// Immutable after construction; eval_regressor is pure.
class ModelSpec {
 public:
  ModelSpec(int dimension, std::vector<MonomialTerm> terms);

  int dimension() const { return dimension_; }
  int p() const { return static_cast<int>(terms_.size()); }
  const std::vector<MonomialTerm>& terms() const { return terms_; }

 private:
  int dimension_;
  std::vector<MonomialTerm> terms_;
};

/// All monomials of total degree <= 2 in d variables, ordered constant,
/// linear terms, then degree-2 terms in graded-lexicographic order.
/// p = (d+1)(d+2)/2.  Dimensions above 4 are allowed but grid sizes
/// explode quickly; the CLI warns, the library does not.
ModelSpec full_quadratic_basis(int d);

/// The basis {w_1, ..., w_d} with no intercept; p = d.
ModelSpec linear_basis_no_intercept(int d);

/// Evaluate the regressor x(w).  0^0 is 1.
Eigen::VectorXd eval_regressor(const ModelSpec& model,
                               const Eigen::Ref<const Eigen::VectorXd>& w);

}  // namespace optdes

#endif  // OPTDES_MODEL_HPP
