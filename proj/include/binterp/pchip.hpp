#pragma once

#include "binterp/grid.hpp"
#include "binterp/interp_nd.hpp"
#include "binterp/mesh.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace binterp {

// Fritsch-Carlson node slopes: weighted harmonic mean of the neighbouring
// secants, zero where the data has a local extremum, and a limited
// three-point formula at the ends.
template <typename Scalar, typename Derived>
Vector<Scalar> pchip_slopes(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<Derived>& u) {
  const Index n = mesh.size();
  Vector<Scalar> d(n);
  Vector<Scalar> h(n - 1), m(n - 1);
  for (Index k = 0; k + 1 < n; ++k) {
    h[k] = mesh.width(k);
    m[k] = (u[k + 1] - u[k]) / h[k];
  }
  if (n == 2) {
    d.setConstant(m[0]);
    return d;
  }

  for (Index k = 1; k + 1 < n; ++k) {
    if (m[k - 1] * m[k] <= 0) {
      d[k] = 0;
      continue;
    }
    const Scalar w1 = 2 * h[k] + h[k - 1];
    const Scalar w2 = h[k] + 2 * h[k - 1];
    d[k] = (w1 + w2) / (w1 / m[k - 1] + w2 / m[k]);
  }

  auto end_slope = [](Scalar h0, Scalar h1, Scalar m0, Scalar m1) {
    Scalar s = ((2 * h0 + h1) * m0 - h0 * m1) / (h0 + h1);
    const auto sign = [](Scalar v) { return (v > 0) - (v < 0); };
    if (sign(s) != sign(m0)) {
      s = 0;
    } else if (sign(m0) != sign(m1) && std::abs(s) > 3 * std::abs(m0)) {
      s = 3 * m0;
    }
    return s;
  };
  d[0] = end_slope(h[0], h[1], m[0], m[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], m[n - 2], m[n - 3]);
  return d;
}

// Piecewise cubic Hermite interpolation with PCHIP slopes.
template <typename Scalar>
class PchipInterpolator1D {
 public:
  template <typename DerivedV, typename DerivedX, typename DerivedO>
  void apply(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<DerivedV>& u,
             const Eigen::MatrixBase<DerivedX>& xout, Eigen::MatrixBase<DerivedO>& out) {
    if (u.size() != mesh.size()) {
      throw std::invalid_argument("pchip: " + std::to_string(u.size()) + " values for " +
                                  std::to_string(mesh.size()) + " mesh points");
    }
    for (Index k = 0; k < xout.size(); ++k) {
      if (!mesh.contains(xout[k])) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "output point " << xout[k] << " (index " << k << ") lies outside [" << mesh.front()
            << ", " << mesh.back() << "]";
        throw std::out_of_range(msg.str());
      }
    }
    const Vector<Scalar> d = pchip_slopes(mesh, u);
    for (Index k = 0; k < xout.size(); ++k) {
      const Scalar x = xout[k];
      const Index i = mesh.locate(x);
      if (x == mesh[i + 1]) {
        out[k] = u[i + 1];
        continue;
      }
      const Scalar h = mesh.width(i);
      const Scalar t = (x - mesh[i]) / h;
      const Scalar t2 = t * t, t3 = t2 * t;
      const Scalar h00 = 2 * t3 - 3 * t2 + 1;
      const Scalar h10 = t3 - 2 * t2 + t;
      const Scalar h01 = -2 * t3 + 3 * t2;
      const Scalar h11 = t3 - t2;
      out[k] = h00 * u[i] + h10 * h * d[i] + h01 * u[i + 1] + h11 * h * d[i + 1];
    }
  }

  template <typename DerivedV, typename DerivedX>
  Vector<Scalar> operator()(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<DerivedV>& u,
                            const Eigen::MatrixBase<DerivedX>& xout) {
    Vector<Scalar> out(xout.size());
    apply(mesh, u, xout, out);
    return out;
  }
};

template <typename Scalar, typename DerivedV, typename DerivedX>
Vector<Scalar> pchip_1d(const Mesh1D<Scalar>& x, const Eigen::MatrixBase<DerivedV>& u,
                        const Eigen::MatrixBase<DerivedX>& xout) {
  PchipInterpolator1D<Scalar> interp;
  return interp(x, u, xout);
}

// x sweep then y sweep, staged like the adaptive 2D driver.
template <typename Scalar>
GridField2D<Scalar> pchip_2d(const GridField2D<Scalar>& field, const Mesh1D<Scalar>& xout,
                             const Mesh1D<Scalar>& yout) {
  PchipInterpolator1D<Scalar> interp;
  const Index nx = field.xs.size(), ny = field.ys.size();
  const Index mx = xout.size(), my = yout.size();

  Matrix<Scalar> stage(mx, ny);
  detail::sweep_lines(interp, "x", field.xs, xout, field.values.data(), 1, stage.data(), 1, ny,
                      [&](Index j) { return std::pair{j * nx, j * mx}; });
  Matrix<Scalar> result(mx, my);
  detail::sweep_lines(interp, "y", field.ys, yout, stage.data(), mx, result.data(), mx, mx,
                      [&](Index i) { return std::pair{i, i}; });
  return {xout, yout, std::move(result)};
}

}  // namespace binterp
