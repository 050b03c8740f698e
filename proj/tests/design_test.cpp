#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "optdes/design.hpp"

using namespace optdes;

namespace {

DesignDensity random_density(const QuadratureGrid& grid, std::mt19937& rng) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  DesignDensity f;
  f.values.resize(grid.size());
  for (long i = 0; i < grid.size(); ++i) f.values[i] = u(rng);
  f.values /= f.mass(grid);
  return f;
}

// exact midpoint-rule second moment of the uniform density on [-1,1]
double m22_midpoint(int n) { return (1.0 - 1.0 / (double(n) * n)) / 3.0; }

}  // namespace

TEST_CASE("uniform density is 1/|E|") {
  QuadratureGrid sq = grid_box({{-1, 1}, {-1, 1}}, 11);
  DesignDensity f = uniform_density(sq);
  CHECK(f.values[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(f.mass(sq) == doctest::Approx(1.0).epsilon(1e-14));

  QuadratureGrid disc = grid_disc({0, 0}, 1.0, 20, 40);
  CHECK(uniform_density(disc).values[0] ==
        doctest::Approx(1.0 / 3.14159265358979).epsilon(1e-9));

  QuadratureGrid seg = grid_box({{0, 1}}, 8);
  CHECK(uniform_density(seg).values[3] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("information matrix against closed-form moments") {
  SUBCASE("linear model, uniform on the unit disc: M = I/4") {
    ModelSpec m = linear_basis_no_intercept(2);
    QuadratureGrid g = grid_disc({0, 0}, 1.0, 80, 160);
    InfoMatrix info = info_matrix(uniform_density(g), g, m);
    CHECK(info.m()(0, 0) == doctest::Approx(0.25).epsilon(1e-4));
    CHECK(info.m()(1, 1) == doctest::Approx(0.25).epsilon(1e-4));
    CHECK(std::abs(info.m()(0, 1)) < 1e-12);
  }
  SUBCASE("1-D {1,w} uniform on [-1,1]: M = diag(1, 1/3)") {
    ModelSpec m = full_quadratic_basis(1);
    ModelSpec lin(1, {MonomialTerm{{0}}, MonomialTerm{{1}}});
    const int n = 41;
    QuadratureGrid g = grid_box({{-1, 1}}, n);
    InfoMatrix info = info_matrix(uniform_density(g), g, lin);
    CHECK(info.m()(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(info.m()(0, 1)) < 1e-14);
    // exact value of the discretized moment, then the analytic limit
    CHECK(info.m()(1, 1) ==
          doctest::Approx(m22_midpoint(n)).epsilon(1e-13));
    CHECK(info.m()(1, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  }
  SUBCASE("a one-cell point mass is rank one and rejected for p=2") {
    ModelSpec m = linear_basis_no_intercept(2);
    QuadratureGrid g = grid_disc({0, 0}, 1.0, 10, 20);
    DesignDensity f;
    f.values = Eigen::VectorXd::Zero(g.size());
    f.values[17] = 1.0 / g.measures[17];
    CHECK_THROWS_AS(info_matrix(f, g, m), SingularInformation);
  }
}

TEST_CASE("sensitivity identities hold for arbitrary densities") {
  std::mt19937 rng(7);
  ModelSpec m = full_quadratic_basis(2);
  QuadratureGrid g = grid_box({{-1, 1}, {-1, 1}}, 15);
  for (int trial = 0; trial < 20; ++trial) {
    DesignDensity f = random_density(g, rng);
    Eigen::VectorXd phi = d_sensitivity(f, g, m);
    Eigen::VectorXd psi = a_sensitivity(f, g, m);
    double sum_phi = 0.0, sum_psi = 0.0;
    for (long i = 0; i < g.size(); ++i) {
      const double c = f.values[i] * g.measures[i];
      sum_phi += c * phi[i];
      sum_psi += c * psi[i];
    }
    CHECK(sum_phi == doctest::Approx(m.p()).epsilon(1e-10));
    CHECK(sum_psi == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(phi.minCoeff() >= 0.0);
    CHECK(psi.minCoeff() >= 0.0);
  }
}

TEST_CASE("sensitivities against closed forms") {
  ModelSpec lin1(1, {MonomialTerm{{0}}, MonomialTerm{{1}}});
  const int n = 101;
  QuadratureGrid g = grid_box({{-1, 1}}, n);
  DesignDensity f = uniform_density(g);

  SUBCASE("phi(w) = 1 + 3 w^2") {
    Eigen::VectorXd phi = d_sensitivity(f, g, lin1);
    const double m22 = m22_midpoint(n);
    for (long i = 0; i < g.size(); ++i) {
      const double w = g.nodes(i, 0);
      CHECK(phi[i] == doctest::Approx(1 + w * w / m22).epsilon(1e-12));
      CHECK(phi[i] == doctest::Approx(1 + 3 * w * w).epsilon(2e-3));
    }
  }
  SUBCASE("psi(w) = (1 + 9 w^2) / 4") {
    Eigen::VectorXd psi = a_sensitivity(f, g, lin1);
    for (long i = 0; i < g.size(); ++i) {
      const double w = g.nodes(i, 0);
      CHECK(psi[i] == doctest::Approx((1 + 9 * w * w) / 4).epsilon(2e-3));
    }
  }
  SUBCASE("linear disc model: phi = 4 r^2, psi = 2 r^2") {
    ModelSpec m2 = linear_basis_no_intercept(2);
    QuadratureGrid disc = grid_disc({0, 0}, 1.0, 60, 120);
    DesignDensity u = uniform_density(disc);
    Eigen::VectorXd phi = d_sensitivity(u, disc, m2);
    Eigen::VectorXd psi = a_sensitivity(u, disc, m2);
    for (long i : {0L, 1000L, disc.size() - 1}) {
      const double r2 = disc.nodes.row(i).squaredNorm();
      CHECK(phi[i] == doctest::Approx(4 * r2).epsilon(1e-3));
      CHECK(psi[i] == doctest::Approx(2 * r2).epsilon(1e-3));
    }
  }
}

TEST_CASE("criterion values") {
  ModelSpec lin1(1, {MonomialTerm{{0}}, MonomialTerm{{1}}});
  QuadratureGrid g = grid_box({{-1, 1}}, 201);
  DesignDensity f = uniform_density(g);
  CHECK(criterion_value(Criterion::D, f, g, lin1) ==
        doctest::Approx(-std::log(1.0 / 3.0)).epsilon(1e-4));
  CHECK(criterion_value(Criterion::A, f, g, lin1) ==
        doctest::Approx(4.0).epsilon(1e-4));

  ModelSpec m2 = linear_basis_no_intercept(2);
  QuadratureGrid disc = grid_disc({0, 0}, 1.0, 80, 160);
  CHECK(criterion_value(Criterion::D, uniform_density(disc), disc, m2) ==
        doctest::Approx(-std::log(1.0 / 16.0)).epsilon(1e-3));
}

TEST_CASE("information matrix is linear in the density") {
  std::mt19937 rng(21);
  ModelSpec m = full_quadratic_basis(2);
  QuadratureGrid g = grid_box({{-1, 1}, {-1, 1}}, 9);
  DesignDensity f = random_density(g, rng);
  DesignDensity h = random_density(g, rng);
  const double alpha = 0.37;
  DesignDensity mix;
  mix.values = alpha * f.values + (1 - alpha) * h.values;
  Eigen::MatrixXd lhs = info_matrix(mix, g, m).m();
  Eigen::MatrixXd rhs =
      alpha * info_matrix(f, g, m).m() + (1 - alpha) * info_matrix(h, g, m).m();
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("log det matches an eigenvalue oracle on small instances") {
  std::mt19937 rng(3);
  for (int d : {1, 2}) {
    ModelSpec m = d == 1 ? full_quadratic_basis(1) : linear_basis_no_intercept(2);
    QuadratureGrid g = d == 1 ? grid_box({{-1, 1}}, 31)
                              : grid_box({{-1, 1}, {-1, 1}}, 9);
    DesignDensity f = random_density(g, rng);
    InfoMatrix info = info_matrix(f, g, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(info.m());
    const double oracle = es.eigenvalues().array().log().sum();
    CHECK(info.log_det() == doctest::Approx(oracle).epsilon(1e-10));
    const double tr_oracle = es.eigenvalues().array().inverse().sum();
    CHECK(info.inv_trace() == doctest::Approx(tr_oracle).epsilon(1e-10));
  }
}

TEST_CASE("accumulation is deterministic") {
  std::mt19937 rng(5);
  ModelSpec m = full_quadratic_basis(2);
  QuadratureGrid g = grid_disc({0, 0}, 1.0, 20, 40);
  DesignDensity f = random_density(g, rng);
  Eigen::MatrixXd a = info_matrix(f, g, m).m();
  Eigen::MatrixXd b = info_matrix(f, g, m).m();
  CHECK((a.array() == b.array()).all());
}
