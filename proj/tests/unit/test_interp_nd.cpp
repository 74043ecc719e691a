#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/oracles.hpp"

using namespace binterp;

namespace {

double max_rel(const Matrix<double>& a, const Matrix<double>& b) {
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

}  // namespace

TEST_CASE("constant in y matches the 1D result") {
  auto xs = uniform_mesh(-1.0, 1.0, 15);
  auto ys = uniform_mesh(0.0, 2.0, 6);
  auto g = [](double x) { return 1.0 / (1.0 + 25 * x * x); };
  auto field = sample_grid(xs, ys, [&](double x, double) { return g(x); });
  auto xo = uniform_mesh(-1.0, 1.0, 41);
  auto yo = uniform_mesh(0.0, 2.0, 9);
  InterpConfig c{6};
  auto out = adaptive_interpolation_2d(field, xo, yo, c);
  Vector<double> u(xs.size());
  for (Index k = 0; k < xs.size(); ++k) u[k] = g(xs[k]);
  auto line = adaptive_interpolation_1d(xs, u, xo.points(), c);
  for (Index j = 0; j < yo.size(); ++j) CHECK(out.values.col(j) == line);
}

TEST_CASE("bilinear data is exact") {
  oracle::Generator gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    auto xs = gen.mesh(gen.integer(2, 12), false);
    auto ys = gen.mesh(gen.integer(2, 12), true);
    const double a = gen.uniform(-1, 1), b = gen.uniform(-1, 1), c = gen.uniform(-1, 1),
                 d = gen.uniform(-1, 1);
    auto f = [&](double x, double y) { return a + b * x + c * y + d * x * y; };
    auto field = sample_grid(xs, ys, f);
    auto xo = uniform_mesh(xs.front(), xs.back(), 17);
    auto yo = uniform_mesh(ys.front(), ys.back(), 13);
    auto cfg = gen.config(trial % 2 ? Method::Ppi : Method::Dbi);
    auto out = adaptive_interpolation_2d(field, xo, yo, cfg);
    auto exact = sample_grid(xo, yo, f);
    REQUIRE(max_rel(out.values, exact.values) <= 1e-12);
  }
}

TEST_CASE("3D") {
  auto xs = uniform_mesh(0.0, 1.0, 5);
  auto ys = uniform_mesh(-1.0, 1.0, 4);
  auto zs = uniform_mesh(2.0, 3.0, 6);
  auto xo = uniform_mesh(0.0, 1.0, 7);
  auto yo = uniform_mesh(-1.0, 1.0, 5);
  auto zo = uniform_mesh(2.0, 3.0, 8);

  SUBCASE("constant field") {
    auto field = sample_grid(xs, ys, zs, [](double, double, double) { return 4.25; });
    auto out = adaptive_interpolation_3d(field, xo, yo, zo, InterpConfig{4});
    CHECK(out.values.minCoeff() == 4.25);
    CHECK(out.values.maxCoeff() == 4.25);
  }
  SUBCASE("product of affine factors") {
    auto f = [](double x, double y, double z) { return (1 + 2 * x) * (0.5 - y) * (z - 1); };
    auto field = sample_grid(xs, ys, zs, f);
    auto out = adaptive_interpolation_3d(field, xo, yo, zo, 5, 2);
    auto exact = sample_grid(xo, yo, zo, f);
    CHECK((out.values - exact.values).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(out(6, 4, 7) == doctest::Approx(exact(6, 4, 7)));
  }
}

TEST_CASE("grid field validation and errors") {
  auto xs = uniform_mesh(0.0, 1.0, 4);
  auto ys = uniform_mesh(0.0, 1.0, 3);
  CHECK_THROWS_AS(GridField2D<double>(xs, ys, Matrix<double>::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(GridField3D<double>(xs, ys, ys, Vector<double>::Zero(5)), std::invalid_argument);

  auto field = sample_grid(xs, ys, [](double x, double y) { return x + y; });
  auto outside = uniform_mesh(0.0, 1.5, 4);
  try {
    adaptive_interpolation_2d(field, xs, outside, InterpConfig{});
    FAIL("expected a range error");
  } catch (const std::out_of_range& e) {
    CHECK(std::string(e.what()).find("y") != std::string::npos);
  }
}
