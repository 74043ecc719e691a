#pragma once

#include "binterp/bounds.hpp"
#include "binterp/config.hpp"
#include "binterp/divided_differences.hpp"
#include "binterp/mesh.hpp"
#include "binterp/stencil.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace binterp {

// Slope classification and bounds for interval i. At the mesh ends the
// missing neighbour slope is taken from the opposite neighbour, so both
// outer slopes share a sign.
template <typename Scalar>
IntervalBounds<Scalar> interval_setup(const DividedDifferenceTable<Scalar>& table, Index i,
                                      const InterpConfig& config) {
  const Index last = table.n_points() - 2;  // index of the last interval
  const Scalar sigma = table(i, 1);
  Scalar prev = i > 0 ? table(i - 1, 1) : (i < last ? table(i + 1, 1) : sigma);
  Scalar next = i < last ? table(i + 1, 1) : (i > 0 ? table(i - 1, 1) : sigma);
  const ExtremumClass cls = classify_interval(prev, sigma, next);

  const Scalar u_i = table(i, 0);
  const Scalar u_ip1 = table(i + 1, 0);
  const bool ppi = config.method == Method::Ppi;
  const Scalar eps0 = ppi ? static_cast<Scalar>(config.eps0) : Scalar{0};
  const Scalar eps1 = ppi ? static_cast<Scalar>(config.eps1) : Scalar{0};

  IntervalBounds<Scalar> b;
  std::tie(b.u_min, b.u_max) = interval_bounds(u_i, u_ip1, cls, eps0, eps1);
  b.degenerate = u_i == u_ip1;
  if (!b.degenerate) {
    std::tie(b.m_l, b.m_r) = *scaling_factors(u_i, u_ip1, b.u_min, b.u_max, config.method);
  }
  return b;
}

// Reusable 1D driver. The divided-difference table is kept between calls so
// repeated line sweeps do not reallocate.
template <typename Scalar>
class AdaptiveInterpolator1D {
 public:
  explicit AdaptiveInterpolator1D(InterpConfig config) : config_(config) { config_.validate(); }

  const InterpConfig& config() const { return config_; }
  const DividedDifferenceTable<Scalar>& table() const { return table_; }

  // One piece per mesh interval.
  template <typename Derived>
  const std::vector<IntervalInterpolant<Scalar>>& build(const Mesh1D<Scalar>& mesh,
                                                        const Eigen::MatrixBase<Derived>& values) {
    table_.assign(mesh, values, config_.degree + 1);
    pieces_.resize(static_cast<std::size_t>(mesh.intervals()));
    for (Index i = 0; i < mesh.intervals(); ++i) {
      pieces_[static_cast<std::size_t>(i)] =
          build_stencil(mesh, table_, i, interval_setup(table_, i, config_), config_);
    }
    return pieces_;
  }

  template <typename DerivedV, typename DerivedX>
  Vector<Scalar> operator()(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<DerivedV>& values,
                            const Eigen::MatrixBase<DerivedX>& xout) {
    Vector<Scalar> out(xout.size());
    apply(mesh, values, xout, out);
    return out;
  }

  template <typename DerivedV, typename DerivedX, typename DerivedO>
  void apply(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<DerivedV>& values,
             const Eigen::MatrixBase<DerivedX>& xout, Eigen::MatrixBase<DerivedO>& out) {
    check_range(mesh, xout);
    build(mesh, values);
    for (Index k = 0; k < xout.size(); ++k) {
      const Scalar x = xout[k];
      const Index i = mesh.locate(x);
      out[k] = x == mesh[i + 1] ? values[i + 1]
                                : newton_eval(pieces_[static_cast<std::size_t>(i)], mesh, x);
    }
  }

 private:
  template <typename DerivedX>
  static void check_range(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<DerivedX>& xout) {
    for (Index k = 0; k < xout.size(); ++k) {
      if (!mesh.contains(xout[k])) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "output point " << xout[k] << " (index " << k << ") lies outside [" << mesh.front()
            << ", " << mesh.back() << "]";
        throw std::out_of_range(msg.str());
      }
    }
  }

  InterpConfig config_;
  DividedDifferenceTable<Scalar> table_;
  std::vector<IntervalInterpolant<Scalar>> pieces_;
};

template <typename Scalar, typename DerivedV, typename DerivedX>
Vector<Scalar> adaptive_interpolation_1d(const Mesh1D<Scalar>& x, const Eigen::MatrixBase<DerivedV>& v,
                                         const Eigen::MatrixBase<DerivedX>& xout,
                                         const InterpConfig& config) {
  AdaptiveInterpolator1D<Scalar> interp(config);
  return interp(x, v, xout);
}

// Argument order of the reference interface: (x, v, xout, d, im, st, eps0, eps1).
template <typename Scalar, typename DerivedV, typename DerivedX>
Vector<Scalar> adaptive_interpolation_1d(const Mesh1D<Scalar>& x, const Eigen::MatrixBase<DerivedV>& v,
                                         const Eigen::MatrixBase<DerivedX>& xout, int d, int im,
                                         int st = 3, double eps0 = 0.01, double eps1 = 1.0) {
  return adaptive_interpolation_1d(x, v, xout,
                                   InterpConfig{d, method_from_int(im), policy_from_int(st), eps0, eps1});
}

}  // namespace binterp
