#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace binterp {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Strictly increasing sequence of at least two coordinates.
template <typename Scalar>
class Mesh1D {
 public:
  Mesh1D() = default;

  template <typename Derived>
  explicit Mesh1D(const Eigen::MatrixBase<Derived>& points) : points_(points) {
    validate();
  }

  Mesh1D(std::initializer_list<Scalar> points) : points_(static_cast<Index>(points.size())) {
    std::copy(points.begin(), points.end(), points_.data());
    validate();
  }

  Index size() const { return points_.size(); }
  Index intervals() const { return points_.size() - 1; }
  Scalar operator[](Index k) const { return points_[k]; }
  Scalar front() const { return points_[0]; }
  Scalar back() const { return points_[points_.size() - 1]; }
  Scalar width(Index i) const { return points_[i + 1] - points_[i]; }
  const Vector<Scalar>& points() const { return points_; }

  bool contains(Scalar x) const { return x >= front() && x <= back(); }

  // Interval index i with x in [x_i, x_{i+1}); the last interval is closed.
  // Caller guarantees contains(x).
  Index locate(Scalar x) const {
    const Scalar* first = points_.data();
    const Scalar* last = first + points_.size();
    Index k = static_cast<Index>(std::upper_bound(first, last, x) - first) - 1;
    return std::clamp<Index>(k, 0, intervals() - 1);
  }

 private:
  void validate() const {
    if (points_.size() < 2) {
      throw std::invalid_argument("mesh needs at least two points, got " +
                                  std::to_string(points_.size()));
    }
    for (Index k = 0; k + 1 < points_.size(); ++k) {
      if (!(points_[k] < points_[k + 1])) {
        throw std::invalid_argument("mesh is not strictly increasing at index " +
                                    std::to_string(k));
      }
    }
  }

  Vector<Scalar> points_;
};

// n uniformly spaced points on [a, b], both endpoints included.
template <typename Scalar>
Mesh1D<Scalar> uniform_mesh(Scalar a, Scalar b, Index n) {
  if (n < 2) throw std::invalid_argument("uniform mesh needs at least two points");
  Vector<Scalar> p(n);
  for (Index k = 0; k < n; ++k) {
    p[k] = a + (b - a) * static_cast<Scalar>(k) / static_cast<Scalar>(n - 1);
  }
  p[n - 1] = b;
  return Mesh1D<Scalar>(p);
}

}  // namespace binterp
