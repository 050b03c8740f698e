#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <set>

#include "optdes/grid.hpp"

using namespace optdes;

namespace {
const std::vector<std::pair<double, double>> kSquare{{-1, 1}, {-1, 1}};
}

TEST_CASE("cell-centered box grids") {
  SUBCASE("2x2 on the square") {
    QuadratureGrid g = grid_box(kSquare, 2);
    REQUIRE(g.size() == 4);
    std::multiset<std::pair<double, double>> nodes;
    for (long i = 0; i < 4; ++i) {
      nodes.insert({g.nodes(i, 0), g.nodes(i, 1)});
      CHECK(g.measures[i] == doctest::Approx(1.0));
    }
    CHECK(nodes.count({-0.5, -0.5}) == 1);
    CHECK(nodes.count({0.5, 0.5}) == 1);
  }
  SUBCASE("41x41 covers the square exactly") {
    QuadratureGrid g = grid_box(kSquare, 41);
    CHECK(g.size() == 1681);
    CHECK(g.total_measure == doctest::Approx(4.0).epsilon(1e-14));
  }
  SUBCASE("unit interval, 4 cells") {
    QuadratureGrid g = grid_box({{0, 1}}, 4);
    REQUIRE(g.size() == 4);
    CHECK(g.nodes(0, 0) == doctest::Approx(0.125));
    CHECK(g.nodes(3, 0) == doctest::Approx(0.875));
    for (long i = 0; i < 4; ++i) CHECK(g.measures[i] == doctest::Approx(0.25));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(grid_box(kSquare, 1), GridTooSmall);
    CHECK_THROWS_AS(grid_box(kSquare, 2000), GridTooLarge);
    CHECK_THROWS_AS(grid_box({{1, -1}}, 4), Error);
  }
}

TEST_CASE("closed box grids include the endpoints") {
  QuadratureGrid g = grid_box_closed({{-1, 1}}, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.nodes(0, 0) == -1.0);
  CHECK(g.nodes(4, 0) == 1.0);
  CHECK(g.measures[0] == doctest::Approx(0.25));
  CHECK(g.measures[2] == doctest::Approx(0.5));
  CHECK(g.total_measure == doctest::Approx(2.0).epsilon(1e-15));

  QuadratureGrid g3 = grid_box_closed({{-1, 1}, {-1, 1}, {-1, 1}}, 21);
  CHECK(g3.size() == 9261);
  CHECK(g3.total_measure == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("polar disc grids") {
  SUBCASE("total measure is the disc area") {
    QuadratureGrid g = grid_disc({0, 0}, 1.0, 50, 120);
    CHECK(g.size() == 6000);
    CHECK(g.total_measure ==
          doctest::Approx(std::numbers::pi).epsilon(1e-9));
  }
  SUBCASE("tiny grid") {
    QuadratureGrid g = grid_disc({0, 0}, 1.0, 2, 4);
    REQUIRE(g.size() == 8);
    CHECK(g.total_measure == doctest::Approx(std::numbers::pi).epsilon(1e-12));
  }
  SUBCASE("radius scales the area") {
    QuadratureGrid g = grid_disc({0, 0}, 2.0, 20, 40);
    CHECK(g.total_measure ==
          doctest::Approx(4 * std::numbers::pi).epsilon(1e-12));
  }
  SUBCASE("no node escapes the disc") {
    QuadratureGrid g = grid_disc({0.5, -0.25}, 1.5, 10, 16);
    for (long i = 0; i < g.size(); ++i) {
      const double dx = g.nodes(i, 0) - 0.5, dy = g.nodes(i, 1) + 0.25;
      CHECK(dx * dx + dy * dy <= 1.5 * 1.5 + 1e-12);
    }
  }
  CHECK_THROWS_AS(grid_disc({0, 0}, 1.0, 1, 8), GridTooSmall);
  CHECK_THROWS_AS(grid_disc({0, 0}, 1.0, 2000, 2000), GridTooLarge);
}

TEST_CASE("region volume") {
  CHECK(region_volume(Region::box({{-1, 1}, {-1, 1}, {-1, 1}})) ==
        doctest::Approx(8.0));
  CHECK(region_volume(Region::disc({0, 0}, 1.0)) ==
        doctest::Approx(std::numbers::pi));
  CHECK(region_volume(Region::box(kSquare)) == doctest::Approx(4.0));
}

TEST_CASE("adjacency is symmetric with positive measures") {
  for (const QuadratureGrid& g :
       {grid_box(kSquare, 7), grid_box_closed(kSquare, 6),
        grid_disc({0, 0}, 1.0, 5, 8)}) {
    CHECK(g.measures.minCoeff() > 0.0);
    for (long i = 0; i < g.size(); ++i)
      for (int j : g.adjacency[i]) {
        const auto& back = g.adjacency[j];
        CHECK(std::count(back.begin(), back.end(), static_cast<int>(i)) == 1);
      }
  }
}

TEST_CASE("quadrature converges under refinement") {
  // integral of w1^2 over the unit disc is pi/4
  const double exact = std::numbers::pi / 4.0;
  double prev_err = 1.0;
  for (int n : {10, 20, 40, 80}) {
    QuadratureGrid g = grid_disc({0, 0}, 1.0, n, 2 * n);
    double sum = 0.0;
    for (long i = 0; i < g.size(); ++i)
      sum += g.nodes(i, 0) * g.nodes(i, 0) * g.measures[i];
    const double err = std::abs(sum - exact);
    CHECK(err < prev_err + 1e-15);
    prev_err = err;
  }
  CHECK(prev_err < 1e-4);

  // integral of w^4 over [0,1]
  prev_err = 1.0;
  for (int n : {8, 16, 32, 64}) {
    QuadratureGrid g = grid_box({{0, 1}}, n);
    double sum = 0.0;
    for (long i = 0; i < g.size(); ++i)
      sum += std::pow(g.nodes(i, 0), 4) * g.measures[i];
    const double err = std::abs(sum - 0.2);
    CHECK(err < prev_err + 1e-15);
    prev_err = err;
  }
  CHECK(prev_err < 1e-4);
}
