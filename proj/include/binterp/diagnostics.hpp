#pragma once

#include "binterp/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace binterp {

namespace detail {
inline void require_same_length(Index a, Index b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}
}  // namespace detail

// Trapezoidal weights of a 1D mesh.
template <typename Scalar>
Vector<Scalar> trapezoid_weights(const Mesh1D<Scalar>& mesh) {
  Vector<Scalar> w = Vector<Scalar>::Zero(mesh.size());
  for (Index k = 0; k < mesh.intervals(); ++k) {
    w[k] += mesh.width(k) / 2;
    w[k + 1] += mesh.width(k) / 2;
  }
  return w;
}

// sqrt of the trapezoidal integral of (approx - exact)^2 over the mesh.
template <typename Scalar, typename DerivedA, typename DerivedE>
Scalar l2_error_continuum(const Eigen::MatrixBase<DerivedA>& approx,
                          const Eigen::MatrixBase<DerivedE>& exact, const Mesh1D<Scalar>& mesh) {
  detail::require_same_length(approx.size(), exact.size(), "l2_error_continuum");
  detail::require_same_length(approx.size(), mesh.size(), "l2_error_continuum");
  const Vector<Scalar> sq = (approx - exact).array().square().matrix();
  return std::sqrt(trapezoid_weights(mesh).dot(sq));
}

// Tensor-product trapezoidal rule; rows follow xs and columns ys.
template <typename Scalar, typename DerivedA, typename DerivedE>
Scalar l2_error_continuum(const Eigen::MatrixBase<DerivedA>& approx,
                          const Eigen::MatrixBase<DerivedE>& exact, const Mesh1D<Scalar>& xs,
                          const Mesh1D<Scalar>& ys) {
  detail::require_same_length(approx.rows(), exact.rows(), "l2_error_continuum");
  detail::require_same_length(approx.cols(), exact.cols(), "l2_error_continuum");
  detail::require_same_length(approx.rows(), xs.size(), "l2_error_continuum");
  detail::require_same_length(approx.cols(), ys.size(), "l2_error_continuum");
  const Matrix<Scalar> sq = (approx - exact).array().square().matrix();
  return std::sqrt(trapezoid_weights(xs).transpose() * sq * trapezoid_weights(ys));
}

// Root-mean-square difference over grid points.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar l2_error_grid(const Eigen::MatrixBase<DerivedA>& a,
                                        const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_same_length(a.size(), b.size(), "l2_error_grid");
  if (a.size() == 0) return 0;
  using Scalar = typename DerivedA::Scalar;
  return std::sqrt((a - b).squaredNorm() / static_cast<Scalar>(a.size()));
}

// Inserts k equally spaced points inside every interval: N -> N + k(N-1).
template <typename Scalar>
Mesh1D<Scalar> refine_mesh(const Mesh1D<Scalar>& mesh, Index k) {
  if (k < 0) throw std::invalid_argument("refine_mesh: k must be >= 0");
  const Index n = mesh.size();
  Vector<Scalar> p(n + k * (n - 1));
  Index out = 0;
  for (Index i = 0; i + 1 < n; ++i) {
    p[out++] = mesh[i];
    for (Index s = 1; s <= k; ++s) {
      p[out++] = mesh[i] + mesh.width(i) * static_cast<Scalar>(s) / static_cast<Scalar>(k + 1);
    }
  }
  p[out] = mesh[n - 1];
  return Mesh1D<Scalar>(p);
}

// Midpoints of every interval plus both end points.
template <typename Scalar>
Mesh1D<Scalar> midpoint_mesh(const Mesh1D<Scalar>& mesh) {
  const Index n = mesh.size();
  Vector<Scalar> p(n + 1);
  p[0] = mesh[0];
  for (Index i = 0; i + 1 < n; ++i) p[i + 1] = (mesh[i] + mesh[i + 1]) / 2;
  p[n] = mesh[n - 1];
  return Mesh1D<Scalar>(p);
}

}  // namespace binterp
