#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "binterp/diagnostics.hpp"

#include <cmath>

using namespace binterp;
using doctest::Approx;

TEST_CASE("continuum L2") {
  auto m = uniform_mesh(0.0, 1.0, 10000);
  Vector<double> zero = Vector<double>::Zero(m.size());
  Vector<double> x = m.points();

  CHECK(l2_error_continuum(x, x, m) == 0.0);
  CHECK(l2_error_continuum(Vector<double>(zero.array() + 0.25), zero, m) == Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(l2_error_continuum(x, zero, m) - std::sqrt(1.0 / 3.0)) < 1e-6);
  CHECK_THROWS_AS(l2_error_continuum(Vector<double>(x.head(5)), x, m), std::invalid_argument);
}

TEST_CASE("continuum L2 in 2D") {
  auto xs = uniform_mesh(0.0, 2.0, 300);
  auto ys = uniform_mesh(0.0, 1.0, 200);
  Matrix<double> a = Matrix<double>::Constant(300, 200, 3.0);
  Matrix<double> b = Matrix<double>::Zero(300, 200);
  // sqrt(9 * area 2)
  CHECK(l2_error_continuum(a, b, xs, ys) == Approx(std::sqrt(18.0)).epsilon(1e-12));
  CHECK_THROWS_AS(l2_error_continuum(a, Matrix<double>(b.leftCols(10)), xs, ys), std::invalid_argument);
}

TEST_CASE("grid L2 is the root mean square") {
  Vector<double> a(2), b(2);
  a << 3, 4;
  b << 0, 0;
  CHECK(l2_error_grid(a, a) == 0.0);
  CHECK(l2_error_grid(a, b) == Approx(std::sqrt(12.5)));
  CHECK_THROWS_AS(l2_error_grid(a, Vector<double>(Vector<double>::Zero(3))), std::invalid_argument);
}

TEST_CASE("trapezoid weights sum to the length") {
  Mesh1D<double> m{0.0, 0.1, 0.5, 2.0};
  CHECK(trapezoid_weights(m).sum() == Approx(2.0));
}

TEST_CASE("mesh refinement") {
  auto m = uniform_mesh(0.0, 1.0, 64);
  CHECK(refine_mesh(m, 1).size() == 127);
  CHECK(refine_mesh(m, 3).size() == 253);
  CHECK(refine_mesh(m, 0).points() == m.points());
  auto r = refine_mesh(Mesh1D<double>{0.0, 1.0, 3.0}, 1);
  CHECK(r[1] == 0.5);
  CHECK(r[3] == 2.0);
  CHECK_THROWS_AS(refine_mesh(m, -1), std::invalid_argument);
}

TEST_CASE("midpoint mesh keeps the ends") {
  auto r = midpoint_mesh(Mesh1D<double>{0.0, 1.0, 3.0});
  REQUIRE(r.size() == 4);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == 0.5);
  CHECK(r[2] == 2.0);
  CHECK(r[3] == 3.0);
}
