#pragma once

#include <span>
#include <string>
#include <vector>

namespace confwave {

// Uniform lattice over the closed space-time box Omega x [0,T].
// Axis 0 is time everywhere; axes 1..n are space. Node storage is
// time-major row-major: index = ((k*N + i1)*N + ... )*N + in.
class SpacetimeGrid {
 public:
  // Spatial box is [lo, lo+len]^n with len = (N-1)*h per axis. The time step
  // is dt = T/steps with steps = ceil(T/(cfl_request*h)), so the realized
  // Courant factor dt/h never exceeds the request and T/dt is an integer.
  static SpacetimeGrid make(int n, int nodes_per_axis, double T,
                            double cfl_request = 0.5,
                            std::span<const double> lo = {},
                            double axis_length = 1.0);

  int n() const { return n_; }
  int m() const { return n_ + 1; }
  int nodes_per_axis() const { return N_; }
  double h() const { return h_; }
  double T() const { return T_; }
  double dt() const { return dt_; }
  double cfl() const { return dt_ / h_; }
  int steps() const { return steps_; }
  int levels() const { return steps_ + 1; }

  long spatial_count() const { return spatial_count_; }
  long node_count() const { return spatial_count_ * levels(); }

  double tcoord(int k) const { return k * dt_; }
  double xcoord(int axis, int i) const { return lo_[axis] + i * h_; }
  double axis_lo(int axis) const { return lo_[axis]; }
  double axis_hi(int axis) const { return lo_[axis] + (N_ - 1) * h_; }

  // Spatial node index <-> multi-index (row-major over axes 1..n).
  long spatial_index(std::span<const int> ix) const;
  void spatial_multi_index(long s, std::span<int> ix) const;
  long index(int k, long spatial) const { return k * spatial_count_ + spatial; }

  // Fill x (size n) with the coordinates of spatial node s.
  void coords(long s, std::span<double> x) const;

  // Boundary classification. A face is encoded as f = 2*axis + side with
  // axis in [0, n) (spatial axes) and side 0 = lo, 1 = hi.
  int face_count() const { return 2 * n_; }
  bool on_boundary(std::span<const int> ix) const;
  bool is_corner(std::span<const int> ix) const;  // on >= 2 faces
  bool on_face(std::span<const int> ix, int face) const;

  // Spatial indices of all non-corner nodes of a face, in row-major order
  // over the tangential axes.
  std::vector<long> face_nodes(int face) const;
  // All boundary spatial indices (corners included), ascending.
  const std::vector<long>& boundary_nodes() const { return boundary_; }

  // Same spatial box and T, doubled resolution: N -> 2N-1 (nodes nest).
  SpacetimeGrid refined() const;

  bool same_layout(const SpacetimeGrid& o) const {
    return n_ == o.n_ && N_ == o.N_ && steps_ == o.steps_ && h_ == o.h_ &&
           dt_ == o.dt_ && lo_ == o.lo_;
  }

  std::string describe() const;

 private:
  int n_ = 0;
  int N_ = 0;
  double h_ = 0, T_ = 0, dt_ = 0;
  int steps_ = 0;
  long spatial_count_ = 0;
  std::vector<double> lo_;
  std::vector<long> sstride_;  // spatial strides per spatial axis
  std::vector<long> boundary_;
};

}  // namespace confwave
