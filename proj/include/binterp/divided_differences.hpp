#pragma once

#include "binterp/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace binterp {

// Lower-triangular table of divided differences. Entry (i, j) holds
// U[x_i, ..., x_{i+j}] and is defined for i + j < n_points().
template <typename Scalar>
class DividedDifferenceTable {
 public:
  DividedDifferenceTable() = default;

  // Recomputes orders 0..min(max_order, n-1) in place. Storage is kept when
  // it is already large enough, so one table can serve many lines.
  template <typename Derived>
  void assign(const Mesh1D<Scalar>& mesh, const Eigen::MatrixBase<Derived>& values,
              Index max_order) {
    if (values.size() != mesh.size()) {
      throw std::invalid_argument("divided differences: " + std::to_string(values.size()) +
                                  " values for " + std::to_string(mesh.size()) + " mesh points");
    }
    if (max_order < 1) throw std::invalid_argument("divided differences: max order must be >= 1");

    n_ = mesh.size();
    order_ = std::min<Index>(max_order, n_ - 1);
    if (entries_.rows() < n_ || entries_.cols() < order_ + 1) {
      entries_.resize(std::max(entries_.rows(), n_), std::max(entries_.cols(), order_ + 1));
    }
    for (Index i = 0; i < n_; ++i) entries_(i, 0) = values[i];
    for (Index j = 1; j <= order_; ++j) {
      for (Index i = 0; i + j < n_; ++i) {
        entries_(i, j) = (entries_(i + 1, j - 1) - entries_(i, j - 1)) / (mesh[i + j] - mesh[i]);
      }
    }
  }

  Scalar operator()(Index i, Index j) const { return entries_(i, j); }

  // Divided difference over the contiguous index window [l, r].
  Scalar window(Index l, Index r) const { return entries_(l, r - l); }

  Index n_points() const { return n_; }
  Index max_order() const { return order_; }

 private:
  Matrix<Scalar> entries_;
  Index n_ = 0;
  Index order_ = 0;
};

template <typename Scalar, typename Derived>
DividedDifferenceTable<Scalar> build_table(const Mesh1D<Scalar>& mesh,
                                           const Eigen::MatrixBase<Derived>& values,
                                           Index max_degree) {
  DividedDifferenceTable<Scalar> table;
  table.assign(mesh, values, max_degree);
  return table;
}

// Newton-form interpolant on [x_i, x_{i+1}] over the contiguous window
// [left, right]. insertion_order starts (i, i+1); coefficients[j] is the
// divided difference of the window after j insertions, so the polynomial is
//   base_value + sum_j coefficients[j] * prod_{k<=j} (x - x_{insertion_order[k]}).
template <typename Scalar>
struct IntervalInterpolant {
  Index interval = 0;
  Index left = 0;
  Index right = 1;
  Scalar base_value{};
  std::vector<Index> insertion_order;
  std::vector<Scalar> coefficients;

  Index degree() const { return right - left; }
};

// Degree-1 piece over [x_i, x_{i+1}].
template <typename Scalar>
IntervalInterpolant<Scalar> linear_piece(const DividedDifferenceTable<Scalar>& table, Index i) {
  IntervalInterpolant<Scalar> piece;
  piece.interval = i;
  piece.left = i;
  piece.right = i + 1;
  piece.base_value = table(i, 0);
  piece.insertion_order = {i, i + 1};
  piece.coefficients = {table(i, 1)};
  return piece;
}

// Nested multiplication over the insertion order.
template <typename Scalar>
Scalar newton_eval(const IntervalInterpolant<Scalar>& piece, const Mesh1D<Scalar>& mesh, Scalar x) {
  const auto& c = piece.coefficients;
  const auto& nodes = piece.insertion_order;
  const auto n = static_cast<Index>(c.size());
  Scalar acc = c[n - 1];
  for (Index j = n - 2; j >= 0; --j) {
    acc = acc * (x - mesh[nodes[j + 1]]) + c[j];
  }
  return piece.base_value + acc * (x - mesh[nodes[0]]);
}

// Local error estimate U[next window] * prod_k max(|x_i - x_k|, |x_{i+1} - x_k|)
// over the stencil nodes. The next window adds the nearer neighbour of the
// stencil; on a distance tie the larger estimate is kept. Empty when the
// stencil already spans the mesh or the table lacks the order.
template <typename Scalar>
std::optional<Scalar> estimate_local_error(const IntervalInterpolant<Scalar>& piece,
                                           const DividedDifferenceTable<Scalar>& table,
                                           const Mesh1D<Scalar>& mesh) {
  const Index next_order = piece.degree() + 1;
  if (next_order > table.max_order()) return std::nullopt;

  const Index i = piece.interval;
  Scalar spread = 1;
  for (Index node : piece.insertion_order) {
    spread *= std::max(std::abs(mesh[i] - mesh[node]), std::abs(mesh[i + 1] - mesh[node]));
  }

  std::optional<Scalar> left_est;
  std::optional<Scalar> right_est;
  if (piece.left > 0) left_est = table.window(piece.left - 1, piece.right) * spread;
  if (piece.right + 1 < mesh.size()) right_est = table.window(piece.left, piece.right + 1) * spread;

  if (left_est && right_est) {
    const Scalar dist_left = mesh[i] - mesh[piece.left - 1];
    const Scalar dist_right = mesh[piece.right + 1] - mesh[i + 1];
    if (dist_left < dist_right) return left_est;
    if (dist_right < dist_left) return right_est;
    return std::abs(*left_est) >= std::abs(*right_est) ? left_est : right_est;
  }
  return left_est ? left_est : right_est;
}

}  // namespace binterp
