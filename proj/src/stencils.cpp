#include "confwave/stencils.hpp"

#include <stdexcept>

namespace confwave {

namespace {

struct AxisLayout {
  long stride;  // node stride along the axis
  long len;     // number of nodes along the axis
  long lines;   // number of independent lines
  long outer_block;
};

AxisLayout layout_for(const SpacetimeGrid& g, int axis) {
  if (axis < 0 || axis > g.n()) throw std::invalid_argument("stencil: bad axis");
  AxisLayout L;
  if (axis == 0) {
    L.stride = g.spatial_count();
    L.len = g.levels();
  } else {
    long s = 1;
    for (int a = g.n(); a > axis; --a) s *= g.nodes_per_axis();
    L.stride = s;
    L.len = g.nodes_per_axis();
  }
  L.lines = g.node_count() / L.len;
  L.outer_block = L.stride * L.len;
  return L;
}

inline long line_base(const AxisLayout& L, long line) {
  const long outer = line / L.stride;
  const long inner = line % L.stride;
  return outer * L.outer_block + inner;
}

template <class Stencil>
Field apply_along(const Field& u, int axis, Exec exec, Stencil&& st) {
  if (u.comps() != 1) throw std::invalid_argument("stencil: scalar fields only");
  const SpacetimeGrid& g = u.grid();
  const AxisLayout L = layout_for(g, axis);
  if (L.len < 5) throw std::invalid_argument("stencil: axis too short");
  Field out(g, 1);
  const double* src = u.data().data();
  double* dst = out.data().data();
  for_each_node(L.lines, exec, [&](long line) {
    const long b = line_base(L, line);
    st(src, dst, b, L.stride, L.len);
  });
  return out;
}

}  // namespace

Field d1_axis(const Field& u, int axis, Exec exec) {
  const double d = axis_spacing(u.grid(), axis);
  const double i2 = 1.0 / (2.0 * d);
  const double i6 = 1.0 / (6.0 * d);
  return apply_along(u, axis, exec,
                     [=](const double* s, double* o, long b, long st, long len) {
                       for (long p = 1; p + 1 < len; ++p)
                         o[b + p * st] = (s[b + (p + 1) * st] - s[b + (p - 1) * st]) * i2;
                       o[b] = (-11 * s[b] + 18 * s[b + st] - 9 * s[b + 2 * st] +
                               2 * s[b + 3 * st]) * i6;
                       const long e = b + (len - 1) * st;
                       o[e] = (11 * s[e] - 18 * s[e - st] + 9 * s[e - 2 * st] -
                               2 * s[e - 3 * st]) * i6;
                     });
}

Field d2_axis(const Field& u, int axis, Exec exec) {
  const double d = axis_spacing(u.grid(), axis);
  const double ih2 = 1.0 / (d * d);
  const double i12 = ih2 / 12.0;
  return apply_along(u, axis, exec,
                     [=](const double* s, double* o, long b, long st, long len) {
                       for (long p = 1; p + 1 < len; ++p)
                         o[b + p * st] = (s[b + (p + 1) * st] - 2 * s[b + p * st] +
                                          s[b + (p - 1) * st]) * ih2;
                       o[b] = (35 * s[b] - 104 * s[b + st] + 114 * s[b + 2 * st] -
                               56 * s[b + 3 * st] + 11 * s[b + 4 * st]) * i12;
                       const long e = b + (len - 1) * st;
                       o[e] = (35 * s[e] - 104 * s[e - st] + 114 * s[e - 2 * st] -
                               56 * s[e - 3 * st] + 11 * s[e - 4 * st]) * i12;
                     });
}

}  // namespace confwave
