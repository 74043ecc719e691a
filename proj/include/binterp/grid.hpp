#pragma once

#include "binterp/mesh.hpp"

#include <stdexcept>
#include <string>

namespace binterp {

// Node values on a tensor-product mesh; values(i, j) sits at (xs[i], ys[j]).
// Column-major storage keeps x fastest-varying.
template <typename Scalar>
struct GridField2D {
  Mesh1D<Scalar> xs;
  Mesh1D<Scalar> ys;
  Matrix<Scalar> values;

  GridField2D() = default;
  GridField2D(Mesh1D<Scalar> x, Mesh1D<Scalar> y, Matrix<Scalar> v)
      : xs(std::move(x)), ys(std::move(y)), values(std::move(v)) {
    if (values.rows() != xs.size() || values.cols() != ys.size()) {
      throw std::invalid_argument("grid field: values are " + std::to_string(values.rows()) + "x" +
                                  std::to_string(values.cols()) + ", mesh is " +
                                  std::to_string(xs.size()) + "x" + std::to_string(ys.size()));
    }
  }

  Scalar operator()(Index i, Index j) const { return values(i, j); }
};

// values[i + nx * (j + ny * k)] sits at (xs[i], ys[j], zs[k]).
template <typename Scalar>
struct GridField3D {
  Mesh1D<Scalar> xs;
  Mesh1D<Scalar> ys;
  Mesh1D<Scalar> zs;
  Vector<Scalar> values;

  GridField3D() = default;
  GridField3D(Mesh1D<Scalar> x, Mesh1D<Scalar> y, Mesh1D<Scalar> z, Vector<Scalar> v)
      : xs(std::move(x)), ys(std::move(y)), zs(std::move(z)), values(std::move(v)) {
    if (values.size() != xs.size() * ys.size() * zs.size()) {
      throw std::invalid_argument("grid field: " + std::to_string(values.size()) +
                                  " values for a " + std::to_string(xs.size()) + "x" +
                                  std::to_string(ys.size()) + "x" + std::to_string(zs.size()) +
                                  " mesh");
    }
  }

  Index index(Index i, Index j, Index k) const { return i + xs.size() * (j + ys.size() * k); }
  Scalar operator()(Index i, Index j, Index k) const { return values[index(i, j, k)]; }
  Scalar& operator()(Index i, Index j, Index k) { return values[index(i, j, k)]; }
};

template <typename Scalar, typename F>
GridField2D<Scalar> sample_grid(const Mesh1D<Scalar>& xs, const Mesh1D<Scalar>& ys, F&& f) {
  Matrix<Scalar> v(xs.size(), ys.size());
  for (Index j = 0; j < ys.size(); ++j) {
    for (Index i = 0; i < xs.size(); ++i) v(i, j) = f(xs[i], ys[j]);
  }
  return {xs, ys, std::move(v)};
}

template <typename Scalar, typename F>
GridField3D<Scalar> sample_grid(const Mesh1D<Scalar>& xs, const Mesh1D<Scalar>& ys,
                                const Mesh1D<Scalar>& zs, F&& f) {
  Vector<Scalar> v(xs.size() * ys.size() * zs.size());
  Index n = 0;
  for (Index k = 0; k < zs.size(); ++k) {
    for (Index j = 0; j < ys.size(); ++j) {
      for (Index i = 0; i < xs.size(); ++i) v[n++] = f(xs[i], ys[j], zs[k]);
    }
  }
  return {xs, ys, zs, std::move(v)};
}

}  // namespace binterp
