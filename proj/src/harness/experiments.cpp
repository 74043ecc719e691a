#include "binterp/harness/experiments.hpp"

#include "binterp/diagnostics.hpp"
#include "binterp/grid.hpp"
#include "binterp/interp1d.hpp"
#include "binterp/interp_nd.hpp"
#include "binterp/pchip.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace binterp::harness {

namespace {

using Vec = Vector<double>;
using Mesh = Mesh1D<double>;

Vec sample(TestFunction fn, const Mesh& mesh) {
  Vec v(mesh.size());
  for (Index k = 0; k < mesh.size(); ++k) v[k] = eval_test_function(fn, mesh[k]);
  return v;
}

GridField2D<double> sample(TestFunction fn, const Mesh& xs, const Mesh& ys) {
  return sample_grid(xs, ys, [fn](double x, double y) { return eval_test_function(fn, x, y); });
}

Vec map_1d(const ExperimentSpec& spec, const Mesh& from, const Vec& values, const Mesh& to) {
  if (spec.scheme == Scheme::Pchip) return pchip_1d(from, values, to.points());
  return adaptive_interpolation_1d(from, values, to.points(), spec.config);
}

GridField2D<double> map_2d(const ExperimentSpec& spec, const GridField2D<double>& field,
                           const Mesh& xout, const Mesh& yout) {
  if (spec.scheme == Scheme::Pchip) return pchip_2d(field, xout, yout);
  return adaptive_interpolation_2d(field, xout, yout, spec.config);
}

InterpConfig effective_config(const ExperimentSpec& spec) {
  InterpConfig c = spec.config;
  if (spec.scheme == Scheme::Dbi) c.method = Method::Dbi;
  if (spec.scheme == Scheme::Ppi) c.method = Method::Ppi;
  if (spec.scheme == Scheme::Pchip) c.degree = 3;
  return c;
}

ResultRow make_row(const ExperimentSpec& spec, long n, double l2) {
  ResultRow row;
  row.n = n;
  row.scheme = spec.scheme;
  row.degree = spec.config.degree;
  row.st = static_cast<int>(spec.config.policy);
  row.eps0 = spec.config.eps0;
  row.eps1 = spec.config.eps1;
  row.l2 = l2;
  return row;
}

void check_spec(const ExperimentSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("N must be >= 2");
  if (spec.refine < 0) throw std::invalid_argument("refinement must be >= 0");
  spec.config.validate();
}

}  // namespace

Scheme parse_scheme(std::string_view name) {
  if (name == "dbi") return Scheme::Dbi;
  if (name == "ppi") return Scheme::Ppi;
  if (name == "pchip") return Scheme::Pchip;
  throw std::invalid_argument("unknown method '" + std::string(name) + "' (expected dbi, ppi or pchip)");
}

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Dbi:
      return "dbi";
    case Scheme::Ppi:
      return "ppi";
    case Scheme::Pchip:
      return "pchip";
  }
  return "?";
}

ResultRow run_approximation(const ExperimentSpec& input) {
  ExperimentSpec spec = input;
  spec.config = effective_config(input);
  check_spec(spec);

  const Domain dom = domain(spec.fn);
  if (dimension(spec.fn) == 1) {
    const Mesh mesh = uniform_mesh(dom.x0, dom.x1, spec.n);
    const Mesh dense = uniform_mesh(dom.x0, dom.x1, kDensePoints1D);
    const Vec approx = map_1d(spec, mesh, sample(spec.fn, mesh), dense);
    return make_row(spec, spec.n, l2_error_continuum(approx, sample(spec.fn, dense), dense));
  }

  const Mesh xs = uniform_mesh(dom.x0, dom.x1, spec.n);
  const Mesh ys = uniform_mesh(dom.y0, dom.y1, spec.n);
  const Mesh dx = uniform_mesh(dom.x0, dom.x1, kDensePoints2D);
  const Mesh dy = uniform_mesh(dom.y0, dom.y1, kDensePoints2D);
  const auto approx = map_2d(spec, sample(spec.fn, xs, ys), dx, dy);
  const auto exact = sample(spec.fn, dx, dy);
  return make_row(spec, spec.n, l2_error_continuum(approx.values, exact.values, dx, dy));
}

ResultRow run_roundtrip(const ExperimentSpec& input) {
  ExperimentSpec spec = input;
  spec.config = effective_config(input);
  check_spec(spec);

  const Domain dom = domain(spec.fn);
  auto reaction = [&](const Mesh& m) {
    return spec.mesh_kind == MeshKind::Identity ? m : midpoint_mesh(m);
  };

  if (dimension(spec.fn) == 1) {
    const Mesh advection = refine_mesh(uniform_mesh(dom.x0, dom.x1, spec.n), spec.refine);
    const Mesh react = reaction(advection);
    const Vec original = sample(spec.fn, advection);
    const Vec there = map_1d(spec, advection, original, react);
    const Vec back = map_1d(spec, react, there, advection);
    return make_row(spec, advection.size(), l2_error_grid(back, original));
  }

  const Mesh ax = refine_mesh(uniform_mesh(dom.x0, dom.x1, spec.n), spec.refine);
  const Mesh ay = refine_mesh(uniform_mesh(dom.y0, dom.y1, spec.n), spec.refine);
  const auto original = sample(spec.fn, ax, ay);
  const auto there = map_2d(spec, original, reaction(ax), reaction(ay));
  const auto back = map_2d(spec, there, ax, ay);
  return make_row(spec, ax.size(), l2_error_grid(back.values, original.values));
}

std::vector<ResultRow> run_table(int id) {
  std::vector<ResultRow> rows;
  const InterpConfig defaults{};

  if (id >= 1 && id <= 6) {
    const auto fn = static_cast<TestFunction>(id);
    for (long n : {17L, 33L, 65L, 129L, 257L}) {
      rows.push_back(run_approximation({fn, n, Scheme::Pchip, defaults}));
      for (Scheme s : {Scheme::Dbi, Scheme::Ppi}) {
        for (int d : {3, 4, 8}) {
          InterpConfig c = defaults;
          c.degree = d;
          rows.push_back(run_approximation({fn, n, s, c}));
        }
      }
    }
    return rows;
  }

  if (id == 7) {
    for (long k : {0L, 1L, 3L}) {
      rows.push_back(run_roundtrip({TestFunction::F1, 64, Scheme::Pchip, defaults, k}));
      for (Scheme s : {Scheme::Dbi, Scheme::Ppi}) {
        for (int d : {3, 5, 7}) {
          InterpConfig c = defaults;
          c.degree = d;
          rows.push_back(run_roundtrip({TestFunction::F1, 64, s, c, k}));
        }
      }
    }
    return rows;
  }

  throw std::invalid_argument("unknown table id " + std::to_string(id) + " (expected 1..7)");
}

void write_csv_header(std::ostream& os) { os << "N,method,degree,st,eps0,eps1,l2\n"; }

void write_csv_row(std::ostream& os, const ResultRow& row) {
  std::array<char, 32> buf{};
  auto sci = [&](double v) {
    std::snprintf(buf.data(), buf.size(), "%.5e", v);
    return std::string(buf.data());
  };
  os << row.n << ',' << scheme_name(row.scheme) << ',' << row.degree << ',';
  if (row.scheme == Scheme::Pchip) {
    os << ",,";
  } else {
    os << row.st << ',' << sci(row.eps0) << ',' << sci(row.eps1);
  }
  os << ',' << sci(row.l2) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  write_csv_header(os);
  for (const auto& row : rows) write_csv_row(os, row);
}

}  // namespace binterp::harness
