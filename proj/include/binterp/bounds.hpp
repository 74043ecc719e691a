#pragma once

#include "binterp/config.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace binterp {

// Slope pattern of an interval and its two neighbours. The tag names follow
// the reference formulation: LocalMax is sigma_{i-1} < 0 < sigma_{i+1} and
// relaxes the lower bound, LocalMin is sigma_{i-1} > 0 > sigma_{i+1} and
// relaxes the upper bound, Ambiguous relaxes both.
enum class ExtremumClass { None, LocalMax, LocalMin, Ambiguous };

template <typename Scalar>
struct IntervalBounds {
  Scalar u_min{};
  Scalar u_max{};
  Scalar m_l{0};
  Scalar m_r{1};
  bool degenerate = false;
};

template <typename Scalar>
ExtremumClass classify_interval(Scalar sigma_prev, Scalar sigma_cur, Scalar sigma_next) {
  const Scalar outer = sigma_prev * sigma_next;
  if (outer < 0) return sigma_prev < 0 ? ExtremumClass::LocalMax : ExtremumClass::LocalMin;
  if (sigma_prev * sigma_cur < 0) return ExtremumClass::Ambiguous;
  return ExtremumClass::None;
}

// (u_min, u_max) with Delta_min = eps*|min(u_i, u_{i+1})| and
// Delta_max = eps*|max(u_i, u_{i+1})|. eps1 applies to the side the slope
// pattern relaxes; eps0 everywhere else.
template <typename Scalar>
std::pair<Scalar, Scalar> interval_bounds(Scalar u_i, Scalar u_ip1, ExtremumClass cls, Scalar eps0,
                                          Scalar eps1) {
  const bool relax_low = cls == ExtremumClass::LocalMax || cls == ExtremumClass::Ambiguous;
  const bool relax_high = cls == ExtremumClass::LocalMin || cls == ExtremumClass::Ambiguous;
  const Scalar lo = std::min(u_i, u_ip1);
  const Scalar hi = std::max(u_i, u_ip1);
  const Scalar delta_min = (relax_low ? eps1 : eps0) * std::abs(lo);
  const Scalar delta_max = (relax_high ? eps1 : eps0) * std::abs(hi);
  return {lo - delta_min, hi + delta_max};
}

// Bounds (m_l, m_r) on the normalized polynomial S(x). For u_i == u_{i+1}
// the normalization is w = U[x_1^l..x_1^r] (x_{i+1}-x_i)(x_1^r-x_1^l), passed
// as degenerate_w. Returns nullopt for flat data (degenerate with w == 0).
template <typename Scalar>
std::optional<std::pair<Scalar, Scalar>> scaling_factors(Scalar u_i, Scalar u_ip1, Scalar u_min,
                                                         Scalar u_max, Method method,
                                                         std::optional<std::type_identity_t<Scalar>> degenerate_w = {}) {
  if (method == Method::Dbi) return std::pair<Scalar, Scalar>{0, 1};

  if (u_ip1 > u_i) {
    return std::pair<Scalar, Scalar>{std::min<Scalar>(0, (u_min - u_i) / (u_ip1 - u_i)),
                                     std::max<Scalar>(1, (u_max - u_i) / (u_ip1 - u_i))};
  }
  if (u_ip1 < u_i) {
    return std::pair<Scalar, Scalar>{std::min<Scalar>(0, (u_max - u_i) / (u_ip1 - u_i)),
                                     std::max<Scalar>(1, (u_min - u_i) / (u_ip1 - u_i))};
  }

  if (!degenerate_w) throw std::invalid_argument("scaling factors: u_i == u_{i+1} requires w");
  const Scalar w = *degenerate_w;
  if (w > 0) {
    return std::pair<Scalar, Scalar>{std::min<Scalar>(0, (u_min - u_i) / w),
                                     std::max<Scalar>(1, (u_max - u_i) / w)};
  }
  if (w < 0) {
    return std::pair<Scalar, Scalar>{std::min<Scalar>(0, (u_max - u_i) / w),
                                     std::max<Scalar>(1, (u_min - u_i) / w)};
  }
  return std::nullopt;
}

// Admissible range [lo, hi] of S(x) = (U(x) - u_i) / w for the degenerate
// normalization, without the clamps to 0 and 1 applied by scaling_factors.
// S(0) = S(1) = 0 in that normalization, so clamping m_r to 1 would let the
// interpolant reach u_i + w and leave [u_min, u_max].
template <typename Scalar>
std::pair<Scalar, Scalar> degenerate_range(Scalar u_i, Scalar u_min, Scalar u_max, Scalar w) {
  if (w > 0) return {(u_min - u_i) / w, (u_max - u_i) / w};
  return {(u_max - u_i) / w, (u_min - u_i) / w};
}

}  // namespace binterp
