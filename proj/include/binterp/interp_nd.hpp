#pragma once

#include "binterp/grid.hpp"
#include "binterp/interp1d.hpp"

#include <stdexcept>
#include <string>

namespace binterp {

namespace detail {

// Runs `sweep` and prefixes any error with the sweep and line it came from.
template <typename F>
void on_line(const char* axis, Index line, F&& sweep) {
  try {
    sweep();
  } catch (const std::out_of_range& e) {
    throw std::out_of_range(std::string(axis) + " sweep, line " + std::to_string(line) + ": " +
                            e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(axis) + " sweep, line " + std::to_string(line) + ": " +
                                e.what());
  }
}

// Applies `interp` to every line of a field stored as a flat array. Lines run
// along an axis with `n_in` nodes and spacing `stride`; `lines` enumerates
// (offset_in, offset_out) pairs through `line_offsets`.
template <typename Scalar, typename Interp, typename Offsets>
void sweep_lines(Interp& interp, const char* axis, const Mesh1D<Scalar>& mesh,
                 const Mesh1D<Scalar>& out_mesh, const Scalar* in, Index in_stride, Scalar* out,
                 Index out_stride, Index lines, Offsets&& line_offsets) {
  Vector<Scalar> buf_in(mesh.size());
  Vector<Scalar> buf_out(out_mesh.size());
  for (Index line = 0; line < lines; ++line) {
    const auto [off_in, off_out] = line_offsets(line);
    for (Index k = 0; k < mesh.size(); ++k) buf_in[k] = in[off_in + k * in_stride];
    on_line(axis, line, [&] { interp.apply(mesh, buf_in, out_mesh.points(), buf_out); });
    for (Index k = 0; k < out_mesh.size(); ++k) out[off_out + k * out_stride] = buf_out[k];
  }
}

}  // namespace detail

// x sweep (nx*ny -> mx*ny) followed by y sweep (mx*ny -> mx*my).
template <typename Scalar>
GridField2D<Scalar> adaptive_interpolation_2d(const GridField2D<Scalar>& field,
                                              const Mesh1D<Scalar>& xout,
                                              const Mesh1D<Scalar>& yout,
                                              const InterpConfig& config) {
  AdaptiveInterpolator1D<Scalar> interp(config);
  const Index nx = field.xs.size(), ny = field.ys.size();
  const Index mx = xout.size(), my = yout.size();

  Matrix<Scalar> stage(mx, ny);
  detail::sweep_lines(interp, "x", field.xs, xout, field.values.data(), 1, stage.data(), 1, ny,
                      [&](Index j) { return std::pair{j * nx, j * mx}; });

  Matrix<Scalar> result(mx, my);
  detail::sweep_lines(interp, "y", field.ys, yout, stage.data(), mx, result.data(), mx, mx,
                      [&](Index i) { return std::pair{i, i}; });
  return {xout, yout, std::move(result)};
}

template <typename Scalar>
GridField2D<Scalar> adaptive_interpolation_2d(const GridField2D<Scalar>& field,
                                              const Mesh1D<Scalar>& xout,
                                              const Mesh1D<Scalar>& yout, int d, int im, int st = 3,
                                              double eps0 = 0.01, double eps1 = 1.0) {
  return adaptive_interpolation_2d(field, xout, yout,
                                   InterpConfig{d, method_from_int(im), policy_from_int(st), eps0, eps1});
}

// Sweeps x, then y, then z.
template <typename Scalar>
GridField3D<Scalar> adaptive_interpolation_3d(const GridField3D<Scalar>& field,
                                              const Mesh1D<Scalar>& xout,
                                              const Mesh1D<Scalar>& yout,
                                              const Mesh1D<Scalar>& zout,
                                              const InterpConfig& config) {
  AdaptiveInterpolator1D<Scalar> interp(config);
  const Index nx = field.xs.size(), ny = field.ys.size(), nz = field.zs.size();
  const Index mx = xout.size(), my = yout.size(), mz = zout.size();

  Vector<Scalar> q(mx * ny * nz);
  detail::sweep_lines(interp, "x", field.xs, xout, field.values.data(), 1, q.data(), 1, ny * nz,
                      [&](Index jk) { return std::pair{jk * nx, jk * mx}; });

  Vector<Scalar> g(mx * my * nz);
  detail::sweep_lines(interp, "y", field.ys, yout, q.data(), mx, g.data(), mx, mx * nz,
                      [&](Index ik) {
                        const Index i = ik % mx, k = ik / mx;
                        return std::pair{i + mx * ny * k, i + mx * my * k};
                      });

  Vector<Scalar> result(mx * my * mz);
  detail::sweep_lines(interp, "z", field.zs, zout, g.data(), mx * my, result.data(), mx * my,
                      mx * my, [&](Index ij) { return std::pair{ij, ij}; });
  return {xout, yout, zout, std::move(result)};
}

template <typename Scalar>
GridField3D<Scalar> adaptive_interpolation_3d(const GridField3D<Scalar>& field,
                                              const Mesh1D<Scalar>& xout,
                                              const Mesh1D<Scalar>& yout,
                                              const Mesh1D<Scalar>& zout, int d, int im, int st = 3,
                                              double eps0 = 0.01, double eps1 = 1.0) {
  return adaptive_interpolation_3d(field, xout, yout, zout,
                                   InterpConfig{d, method_from_int(im), policy_from_int(st), eps0, eps1});
}

}  // namespace binterp
