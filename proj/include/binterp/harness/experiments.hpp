#pragma once

#include "binterp/config.hpp"
#include "binterp/harness/test_functions.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace binterp::harness {

enum class Scheme { Dbi, Ppi, Pchip };

Scheme parse_scheme(std::string_view name);
std::string scheme_name(Scheme s);

// Reaction mesh used by round-trip runs: interval midpoints plus both end
// points, or the advection mesh itself.
enum class MeshKind { Midpoint, Identity };

struct ExperimentSpec {
  TestFunction fn = TestFunction::F1;
  long n = 17;  // points per axis (before refinement)
  Scheme scheme = Scheme::Ppi;
  InterpConfig config{};
  long refine = 0;  // round-trip only
  MeshKind mesh_kind = MeshKind::Midpoint;
};

struct ResultRow {
  long n = 0;
  Scheme scheme = Scheme::Ppi;
  int degree = 0;
  int st = 0;
  double eps0 = 0;
  double eps1 = 0;
  double l2 = 0;
};

inline constexpr long kDensePoints1D = 10000;
inline constexpr long kDensePoints2D = 1000;

// Samples fn on a uniform n (or n x n) mesh, interpolates onto the dense
// uniform grid and returns the trapezoidal L2 error.
ResultRow run_approximation(const ExperimentSpec& spec);

// Maps values from the advection mesh to the reaction mesh and back, and
// returns the grid-point RMS difference against the original values.
ResultRow run_roundtrip(const ExperimentSpec& spec);

// Full sweep behind tables 1-6 (approximation) and 7 (round trip, f1).
std::vector<ResultRow> run_table(int id);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ResultRow& row);
void write_csv(std::ostream& os, const std::vector<ResultRow>& rows);

}  // namespace binterp::harness
