#include "confwave/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace confwave {

SpacetimeGrid SpacetimeGrid::make(int n, int nodes_per_axis, double T,
                                  double cfl_request, std::span<const double> lo,
                                  double axis_length) {
  if (n < 1) throw std::invalid_argument("grid: spatial dimension must be >= 1");
  if (nodes_per_axis < 5)
    throw std::invalid_argument("grid: need at least 5 nodes per axis for the skin stencils");
  if (!(T > 0)) throw std::invalid_argument("grid: T must be positive");
  if (!(cfl_request > 0.0 && cfl_request <= 0.9))
    throw std::invalid_argument("grid: cfl must be in (0, 0.9]");
  SpacetimeGrid g;
  g.n_ = n;
  g.N_ = nodes_per_axis;
  g.h_ = axis_length / (nodes_per_axis - 1);
  g.T_ = T;
  g.steps_ = static_cast<int>(std::ceil(T / (cfl_request * g.h_) - 1e-12));
  g.dt_ = T / g.steps_;
  g.lo_.assign(static_cast<std::size_t>(n), 0.0);
  if (!lo.empty()) {
    if (static_cast<int>(lo.size()) != n)
      throw std::invalid_argument("grid: lo size mismatch");
    for (int a = 0; a < n; ++a) g.lo_[a] = lo[a];
  }
  g.spatial_count_ = 1;
  for (int a = 0; a < n; ++a) g.spatial_count_ *= g.N_;
  g.sstride_.assign(static_cast<std::size_t>(n), 1);
  for (int a = n - 2; a >= 0; --a) g.sstride_[a] = g.sstride_[a + 1] * g.N_;

  std::vector<int> ix(static_cast<std::size_t>(n));
  for (long s = 0; s < g.spatial_count_; ++s) {
    g.spatial_multi_index(s, ix);
    if (g.on_boundary(ix)) g.boundary_.push_back(s);
  }
  return g;
}

long SpacetimeGrid::spatial_index(std::span<const int> ix) const {
  long s = 0;
  for (int a = 0; a < n_; ++a) s += ix[a] * sstride_[a];
  return s;
}

void SpacetimeGrid::spatial_multi_index(long s, std::span<int> ix) const {
  for (int a = 0; a < n_; ++a) {
    ix[a] = static_cast<int>(s / sstride_[a]);
    s -= ix[a] * sstride_[a];
  }
}

void SpacetimeGrid::coords(long s, std::span<double> x) const {
  for (int a = n_ - 1; a >= 0; --a) {
    long i = s % N_;
    x[a] = lo_[a] + i * h_;
    s /= N_;
  }
}

bool SpacetimeGrid::on_boundary(std::span<const int> ix) const {
  for (int a = 0; a < n_; ++a)
    if (ix[a] == 0 || ix[a] == N_ - 1) return true;
  return false;
}

bool SpacetimeGrid::is_corner(std::span<const int> ix) const {
  int faces = 0;
  for (int a = 0; a < n_; ++a)
    if (ix[a] == 0 || ix[a] == N_ - 1) ++faces;
  return faces >= 2;
}

bool SpacetimeGrid::on_face(std::span<const int> ix, int face) const {
  const int axis = face / 2, side = face % 2;
  return ix[axis] == (side == 0 ? 0 : N_ - 1);
}

std::vector<long> SpacetimeGrid::face_nodes(int face) const {
  if (face < 0 || face >= face_count())
    throw std::invalid_argument("grid: bad face id");
  std::vector<long> out;
  std::vector<int> ix(static_cast<std::size_t>(n_));
  for (long s : boundary_) {
    spatial_multi_index(s, ix);
    if (on_face(ix, face) && !is_corner(ix)) out.push_back(s);
  }
  return out;
}

SpacetimeGrid SpacetimeGrid::refined() const {
  double len = (N_ - 1) * h_;
  return make(n_, 2 * N_ - 1, T_, cfl(), lo_, len);
}

std::string SpacetimeGrid::describe() const {
  std::ostringstream os;
  os << "n=" << n_ << " N=" << N_ << " h=" << h_ << " T=" << T_
     << " dt=" << dt_ << " steps=" << steps_;
  return os.str();
}

}  // namespace confwave
