#pragma once

#include <stdexcept>
#include <string>

namespace binterp {

// Numeric values mirror the `im` switch of the reference interface.
enum class Method { Dbi = 1, Ppi = 2 };

// Rule used when both stencil expansions are admissible.
enum class StencilPolicy {
  SmallestDifference = 1,  // ENO-like: smaller |divided difference|
  Symmetric = 2,           // fewer points on that side of x_i
  Closest = 3,             // nearer to the base interval
};

struct InterpConfig {
  int degree = 3;
  Method method = Method::Ppi;
  StencilPolicy policy = StencilPolicy::Closest;
  double eps0 = 0.01;  // intervals without a detected extremum
  double eps1 = 1.0;   // intervals with a detected extremum

  void validate() const {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1, got " + std::to_string(degree));
    if (method != Method::Dbi && method != Method::Ppi) {
      throw std::invalid_argument("method must be DBI (1) or PPI (2)");
    }
    const int st = static_cast<int>(policy);
    if (st < 1 || st > 3) throw std::invalid_argument("st must be 1, 2 or 3, got " + std::to_string(st));
    if (!(eps0 >= 0.0)) throw std::invalid_argument("eps0 must be >= 0");
    if (!(eps1 >= 0.0)) throw std::invalid_argument("eps1 must be >= 0");
  }
};

inline Method method_from_int(int im) {
  if (im == 1) return Method::Dbi;
  if (im == 2) return Method::Ppi;
  throw std::invalid_argument("method must be 1 (DBI) or 2 (PPI), got " + std::to_string(im));
}

inline StencilPolicy policy_from_int(int st) {
  if (st < 1 || st > 3) throw std::invalid_argument("st must be 1, 2 or 3, got " + std::to_string(st));
  return static_cast<StencilPolicy>(st);
}

}  // namespace binterp
