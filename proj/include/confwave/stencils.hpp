#pragma once

#include "confwave/exec.hpp"
#include "confwave/field.hpp"

namespace confwave {

// Finite differences along one space-time axis (0 = time, 1..n = space) of a
// scalar field. Interior stencils are 3-point central (second order); the
// skin uses one-sided third-order variants (4-point for first derivatives,
// 5-point for second derivatives), so residual max-norms converge at the
// interior rate. All stencils are exact on cubics.
Field d1_axis(const Field& u, int axis, Exec exec = Exec::parallel);
Field d2_axis(const Field& u, int axis, Exec exec = Exec::parallel);

// Spacing of the given axis (dt for axis 0, h otherwise).
inline double axis_spacing(const SpacetimeGrid& g, int axis) {
  return axis == 0 ? g.dt() : g.h();
}

}  // namespace confwave
