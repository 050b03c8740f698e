#include "optdes/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace optdes {

int MonomialTerm::total_degree() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

ModelSpec::ModelSpec(int dimension, std::vector<MonomialTerm> terms)
    : dimension_(dimension), terms_(std::move(terms)) {
  if (dimension_ < 1)
    throw DimensionOutOfRange("model dimension must be >= 1, got " +
                              std::to_string(dimension_));
  if (terms_.empty()) throw Error("model needs at least one term");
  std::set<std::vector<int>> seen;
  for (const auto& t : terms_) {
    if (static_cast<int>(t.exponents.size()) != dimension_)
      throw DimensionMismatch("term exponent count does not match dimension");
    for (int e : t.exponents)
      if (e < 0) throw Error("monomial exponents must be nonnegative");
    if (!seen.insert(t.exponents).second)
      throw Error("model terms must be pairwise distinct");
  }
}

ModelSpec full_quadratic_basis(int d) {
  if (d < 1)
    throw DimensionOutOfRange("full_quadratic_basis: d must be >= 1, got " +
                              std::to_string(d));
  std::vector<MonomialTerm> terms;
  terms.push_back(MonomialTerm{std::vector<int>(d, 0)});
  for (int j = 0; j < d; ++j) {
    MonomialTerm t{std::vector<int>(d, 0)};
    t.exponents[j] = 1;
    terms.push_back(std::move(t));
  }
  // degree-2 block in graded-lex order: w_j * w_k with j <= k
  for (int j = 0; j < d; ++j) {
    for (int k = j; k < d; ++k) {
      MonomialTerm t{std::vector<int>(d, 0)};
      t.exponents[j] += 1;
      t.exponents[k] += 1;
      terms.push_back(std::move(t));
    }
  }
  return ModelSpec(d, std::move(terms));
}

ModelSpec linear_basis_no_intercept(int d) {
  if (d < 1)
    throw DimensionOutOfRange(
        "linear_basis_no_intercept: d must be >= 1, got " + std::to_string(d));
  std::vector<MonomialTerm> terms;
  for (int j = 0; j < d; ++j) {
    MonomialTerm t{std::vector<int>(d, 0)};
    t.exponents[j] = 1;
    terms.push_back(std::move(t));
  }
  return ModelSpec(d, std::move(terms));
}

Eigen::VectorXd eval_regressor(const ModelSpec& model,
                               const Eigen::Ref<const Eigen::VectorXd>& w) {
  if (w.size() != model.dimension())
    throw DimensionMismatch("eval_regressor: point has length " +
                            std::to_string(w.size()) + ", model dimension is " +
                            std::to_string(model.dimension()));
  Eigen::VectorXd x(model.p());
  for (int k = 0; k < model.p(); ++k) {
    double v = 1.0;
    const auto& exps = model.terms()[k].exponents;
    for (int j = 0; j < model.dimension(); ++j) {
      for (int e = 0; e < exps[j]; ++e) v *= w[j];
    }
    x[k] = v;
  }
  return x;
}

}  // namespace optdes
