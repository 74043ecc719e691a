#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/oracles.hpp"

using namespace binterp;

TEST_CASE("monotone data gives a monotone interpolant") {
  oracle::Generator gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen.integer(3, 25);
    auto x = gen.mesh(n, trial % 2 == 0);
    Vector<double> u(n);
    u[0] = gen.uniform(-1, 1);
    for (int k = 1; k < n; ++k) u[k] = u[k - 1] + (gen.integer(0, 3) == 0 ? 0.0 : gen.uniform(0, 2));
    Vector<double> xo = oracle::dense_points(x, 1001);
    auto out = pchip_1d(x, u, xo);
    for (Index k = 1; k < out.size(); ++k) REQUIRE(out[k] >= out[k - 1] - 1e-13);
    for (Index i = 0; i < x.intervals(); ++i) {
      for (int s = 0; s < 1001; ++s) {
        const double v = out[i * 1001 + s];
        REQUIRE(v >= u[i] - 1e-13);
        REQUIRE(v <= u[i + 1] + 1e-13);
      }
    }
  }
}

TEST_CASE("affine data is exact") {
  auto x = Mesh1D<double>{0.0, 0.3, 0.4, 1.0, 2.5};
  Vector<double> u = 3.0 - 2.0 * x.points().array();
  Vector<double> xo = oracle::dense_points(x, 17);
  auto out = pchip_1d(x, u, xo);
  for (Index k = 0; k < xo.size(); ++k) {
    CHECK(out[k] == doctest::Approx(3.0 - 2.0 * xo[k]).epsilon(1e-13));
  }
}

TEST_CASE("slopes") {
  auto x = uniform_mesh(0.0, 4.0, 5);
  Vector<double> u(5);
  u << 0, 1, 1, 0, 2;
  auto m = pchip_slopes(x, u);
  CHECK(m[1] == 0.0);  // flat neighbour
  CHECK(m[2] == 0.0);  // extremum
  CHECK(m[3] == 0.0);  // sign change
}

TEST_CASE("2D") {
  auto xs = uniform_mesh(0.0, 1.0, 9);
  auto ys = uniform_mesh(0.0, 1.0, 5);
  auto g = [](double x) { return x < 0.5 ? 0.0 : 1.0; };
  auto xo = uniform_mesh(0.0, 1.0, 33);
  auto yo = uniform_mesh(0.0, 1.0, 7);

  SUBCASE("constant in y") {
    auto field = sample_grid(xs, ys, [&](double x, double) { return g(x); });
    auto out = pchip_2d(field, xo, yo);
    Vector<double> u(xs.size());
    for (Index k = 0; k < xs.size(); ++k) u[k] = g(xs[k]);
    auto line = pchip_1d(xs, u, xo.points());
    for (Index j = 0; j < yo.size(); ++j) CHECK(out.values.col(j) == line);
  }
  SUBCASE("positive data stays nonnegative") {
    auto field = sample_grid(xs, ys, [](double x, double y) { return std::exp(-30 * ((x - 0.5) * (x - 0.5) + y * y)); });
    auto out = pchip_2d(field, uniform_mesh(0.0, 1.0, 200), uniform_mesh(0.0, 1.0, 200));
    CHECK(out.values.minCoeff() >= 0.0);
  }
}

TEST_CASE("errors") {
  auto x = uniform_mesh(0.0, 1.0, 4);
  Vector<double> u = Vector<double>::Zero(4);
  Vector<double> xo(1);
  xo << 2.0;
  CHECK_THROWS_AS(pchip_1d(x, u, xo), std::out_of_range);
  CHECK_THROWS_AS(pchip_1d(x, Vector<double>(Vector<double>::Zero(3)), x.points()), std::invalid_argument);
}
