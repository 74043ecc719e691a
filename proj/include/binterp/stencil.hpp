#pragma once

#include "binterp/bounds.hpp"
#include "binterp/config.hpp"
#include "binterp/divided_differences.hpp"
#include "binterp/mesh.hpp"

#include <cmath>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace binterp {

enum class Direction { Left, Right };

// Stencil growth is measured relative to the base interval width h:
//   t = (x_e - x_i) / h  for an inserted node x_e,
//   d = (x_r - x_l) / h  for the window [x_l, x_r].
template <typename Scalar>
struct GeometryFactors {
  Scalar t{};
  Scalar d{};
};

template <typename Scalar>
GeometryFactors<Scalar> geometry_factors(const Mesh1D<Scalar>& mesh, Index interval, Index left,
                                         Index right, Index inserted) {
  const Scalar h = mesh.width(interval);
  return {(mesh[inserted] - mesh[interval]) / h, (mesh[right] - mesh[left]) / h};
}

// Local coordinate s = (x - x_i) / h, in [0, 1] inside the interval.
template <typename Scalar>
Scalar interval_coordinate(const Mesh1D<Scalar>& mesh, Index interval, Scalar x) {
  return (x - mesh[interval]) / mesh.width(interval);
}

// Standard: lambda_bar is normalized by the interval slope U[x_i, x_{i+1}].
// Degenerate (u_i == u_{i+1}): normalized by w, fixed by the first expansion.
enum class Normalization { Standard, Degenerate };

template <typename Scalar>
struct StencilState {
  Index interval = 0;
  Index left = 0;
  Index right = 1;
  Index expansions = 0;
  Scalar lambda_bar{1};
  Scalar b_minus{};
  Scalar b_plus{};
  Scalar scale{};          // U[x_i, x_{i+1}] or w
  Scalar width_product{1};  // prod of window widths entering lambda_bar
  Scalar last_t{};          // t of the most recent insertion
  Normalization normalization = Normalization::Standard;
  std::vector<Index> insertion_order;

  Index mu_left() const { return interval - left; }
  Index mu_right() const { return right - (interval + 1); }
  Index points() const { return right - left + 1; }

  static StencilState initial(const Mesh1D<Scalar>& mesh, const DividedDifferenceTable<Scalar>& table,
                              Index interval) {
    StencilState s;
    s.interval = interval;
    s.left = interval;
    s.right = interval + 1;
    s.insertion_order = {interval, interval + 1};
    if (table(interval, 0) == table(interval + 1, 0)) {
      s.normalization = Normalization::Degenerate;
      s.width_product = mesh.width(interval);
    } else {
      s.scale = table(interval, 1);
    }
    return s;
  }
};

// Mesh index gained by expanding the state's window in `dir`, if any.
template <typename Scalar>
std::optional<Index> candidate_index(const Mesh1D<Scalar>& mesh, const StencilState<Scalar>& state,
                                     Direction dir) {
  if (dir == Direction::Left) {
    if (state.left == 0) return std::nullopt;
    return state.left - 1;
  }
  if (state.right + 1 >= mesh.size()) return std::nullopt;
  return state.right + 1;
}

// w = U[V_1] (x_{i+1} - x_i) (x_1^r - x_1^l) for the 3-point window [l, r].
template <typename Scalar>
Scalar degenerate_weight(const Mesh1D<Scalar>& mesh, const DividedDifferenceTable<Scalar>& table,
                         Index interval, Index left, Index right) {
  return table.window(left, right) * mesh.width(interval) * (mesh[right] - mesh[left]);
}

// lambda_bar_{j+1} for expanding the state's window in `dir`. Empty when the
// mesh ends on that side, or when a degenerate interval meets w == 0.
template <typename Scalar>
std::optional<Scalar> lambda_bar_candidate(const DividedDifferenceTable<Scalar>& table,
                                           const Mesh1D<Scalar>& mesh,
                                           const StencilState<Scalar>& state, Direction dir) {
  const auto e = candidate_index(mesh, state, dir);
  if (!e) return std::nullopt;
  const Index l = dir == Direction::Left ? *e : state.left;
  const Index r = dir == Direction::Right ? *e : state.right;
  const Scalar width = mesh[r] - mesh[l];

  if (state.normalization == Normalization::Degenerate && state.expansions == 0) {
    if (degenerate_weight(mesh, table, state.interval, l, r) == 0) return std::nullopt;
    return Scalar{1};
  }
  return table.window(l, r) / state.scale * state.width_product * width;
}

// Admissible range (B-_j, B+_j) for lambda_bar_j. For j == 1 only d_1 and
// (m_l, m_r) enter; for j > 1 the range follows from the previous one, where
// t_j belongs to the node inserted at step j-1.
template <typename Scalar>
std::pair<Scalar, Scalar> b_bounds_step(std::optional<std::pair<Scalar, Scalar>> prev,
                                        Scalar lambda_bar_prev, Scalar d_j, Scalar t_j, Scalar m_l,
                                        Scalar m_r, Index j) {
  if (j == 1) return {(-4 * (m_r - 1) - 1) * d_j, (-4 * m_l + 1) * d_j};
  const auto [bm, bp] = *prev;
  if (t_j <= 0) {
    const Scalar f = d_j / (1 - t_j);
    return {(bm - lambda_bar_prev) * f, (bp - lambda_bar_prev) * f};
  }
  const Scalar f = d_j / (-t_j);
  return {(bp - lambda_bar_prev) * f, (bm - lambda_bar_prev) * f};
}

// First-step range for the degenerate normalization, where
// S(x) = s(s-1)/d_1 * (lambda_bar_1 + ...) must stay within [lo, hi].
template <typename Scalar>
std::pair<Scalar, Scalar> b_bounds_first_degenerate(Scalar d_1, Scalar lo, Scalar hi) {
  return {-4 * hi * d_1, -4 * lo * d_1};
}

// Tie-break choice between two admissible expansions.
template <typename Scalar>
Direction select_direction(StencilPolicy policy, bool left_ok, bool right_ok, Scalar dd_left,
                           Scalar dd_right, Index mu_l, Index mu_r, Scalar dist_left,
                           Scalar dist_right, Scalar lb_left, Scalar lb_right) {
  if (left_ok != right_ok) return left_ok ? Direction::Left : Direction::Right;

  switch (policy) {
    case StencilPolicy::SmallestDifference:
      if (std::abs(dd_left) < std::abs(dd_right)) return Direction::Left;
      if (std::abs(dd_left) > std::abs(dd_right)) return Direction::Right;
      break;
    case StencilPolicy::Symmetric:
      if (mu_l < mu_r) return Direction::Left;
      if (mu_l > mu_r) return Direction::Right;
      break;
    case StencilPolicy::Closest:
      if (dist_left < dist_right) return Direction::Left;
      if (dist_left > dist_right) return Direction::Right;
      break;
  }
  return std::abs(lb_left) >= std::abs(lb_right) ? Direction::Right : Direction::Left;
}

// One accepted expansion, recorded for verification.
template <typename Scalar>
struct StencilStep {
  Index inserted = 0;
  Scalar lambda_bar{};
  Scalar b_minus{};
  Scalar b_plus{};
};

template <typename Scalar>
struct StencilTrace {
  Normalization normalization = Normalization::Standard;
  Scalar scale{};  // slope or w
  Scalar m_l{};    // for Degenerate: unclamped range of S
  Scalar m_r{};
  std::vector<StencilStep<Scalar>> steps;
};

namespace detail {

template <typename Scalar>
struct Expansion {
  Direction dir = Direction::Left;
  Index inserted = 0;
  Index left = 0;
  Index right = 0;
  Scalar width{};
  Scalar lambda_bar{};
  Scalar b_minus{};
  Scalar b_plus{};
  Scalar scale{};  // w for the first degenerate step
  Scalar m_l{};
  Scalar m_r{};
  bool admissible = false;
};

template <typename Scalar>
std::optional<Expansion<Scalar>> evaluate_expansion(const Mesh1D<Scalar>& mesh,
                                                    const DividedDifferenceTable<Scalar>& table,
                                                    const StencilState<Scalar>& state,
                                                    const IntervalBounds<Scalar>& bounds,
                                                    Direction dir) {
  const auto e = candidate_index(mesh, state, dir);
  if (!e) return std::nullopt;

  Expansion<Scalar> x;
  x.dir = dir;
  x.inserted = *e;
  x.left = dir == Direction::Left ? *e : state.left;
  x.right = dir == Direction::Right ? *e : state.right;
  x.width = mesh[x.right] - mesh[x.left];
  const Index i = state.interval;
  const Scalar d = x.width / mesh.width(i);
  const Index j = state.expansions + 1;

  if (state.normalization == Normalization::Degenerate && j == 1) {
    x.scale = degenerate_weight(mesh, table, i, x.left, x.right);
    if (x.scale == 0) return x;
    const Scalar u_i = table(i, 0);
    std::tie(x.m_l, x.m_r) = degenerate_range(u_i, bounds.u_min, bounds.u_max, x.scale);
    std::tie(x.b_minus, x.b_plus) = b_bounds_first_degenerate(d, x.m_l, x.m_r);
    x.lambda_bar = 1;
  } else {
    x.lambda_bar = *lambda_bar_candidate(table, mesh, state, dir);
    std::optional<std::pair<Scalar, Scalar>> prev;
    if (j > 1) prev = std::pair{state.b_minus, state.b_plus};
    std::tie(x.b_minus, x.b_plus) =
        b_bounds_step(prev, state.lambda_bar, d, state.last_t, bounds.m_l, bounds.m_r, j);
  }
  x.admissible = x.b_minus <= x.lambda_bar && x.lambda_bar <= x.b_plus;
  return x;
}

}  // namespace detail

// Grows the stencil of interval i one node at a time while the next
// lambda_bar stays inside (B-, B+), up to degree max_degree (capped by the
// table order). The degree-1 piece is always valid.
template <typename Scalar>
IntervalInterpolant<Scalar> build_stencil(const Mesh1D<Scalar>& mesh,
                                          const DividedDifferenceTable<Scalar>& table, Index i,
                                          const IntervalBounds<Scalar>& bounds,
                                          const InterpConfig& config,
                                          StencilTrace<Scalar>* trace = nullptr) {
  IntervalInterpolant<Scalar> piece = linear_piece(table, i);
  auto state = StencilState<Scalar>::initial(mesh, table, i);
  if (trace) {
    *trace = {};
    trace->normalization = state.normalization;
    trace->scale = state.scale;
    trace->m_l = bounds.m_l;
    trace->m_r = bounds.m_r;
  }

  const Index max_degree = std::min<Index>(config.degree, table.max_order());
  const Scalar h = mesh.width(i);

  while (state.right - state.left < max_degree) {
    const auto left = detail::evaluate_expansion(mesh, table, state, bounds, Direction::Left);
    const auto right = detail::evaluate_expansion(mesh, table, state, bounds, Direction::Right);
    const bool left_ok = left && left->admissible;
    const bool right_ok = right && right->admissible;
    if (!left_ok && !right_ok) break;

    Direction dir = left_ok ? Direction::Left : Direction::Right;
    if (left_ok && right_ok) {
      dir = select_direction<Scalar>(
          config.policy, true, true, table.window(left->left, left->right),
          table.window(right->left, right->right), state.mu_left(), state.mu_right(),
          std::abs(mesh[left->inserted] - mesh[i]), std::abs(mesh[right->inserted] - mesh[i + 1]),
          left->lambda_bar, right->lambda_bar);
    }
    const auto& x = dir == Direction::Left ? *left : *right;

    if (state.normalization == Normalization::Degenerate && state.expansions == 0) {
      state.scale = x.scale;
      if (trace) {
        trace->scale = x.scale;
        trace->m_l = x.m_l;
        trace->m_r = x.m_r;
      }
    }
    state.left = x.left;
    state.right = x.right;
    state.expansions += 1;
    state.lambda_bar = x.lambda_bar;
    state.b_minus = x.b_minus;
    state.b_plus = x.b_plus;
    state.width_product *= x.width;
    state.last_t = (mesh[x.inserted] - mesh[i]) / h;
    state.insertion_order.push_back(x.inserted);

    piece.left = x.left;
    piece.right = x.right;
    piece.insertion_order.push_back(x.inserted);
    piece.coefficients.push_back(table.window(x.left, x.right));
    if (trace) trace->steps.push_back({x.inserted, x.lambda_bar, x.b_minus, x.b_plus});
  }
  return piece;
}

}  // namespace binterp
