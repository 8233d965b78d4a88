#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "confwave/grid.hpp"

namespace confwave {

// Values per space-time node, node-major: data[node*comps + c].
// comps = 1 for scalars, m for vectors, m(m+1)/2 for symmetric 2-tensors
// (packed upper triangle), m*m(m+1)/2 for Christoffel symbols.
class Field {
 public:
  Field() = default;
  Field(const SpacetimeGrid& grid, int comps, double init = 0.0)
      : grid_(&grid), comps_(comps),
        data_(static_cast<std::size_t>(grid.node_count()) * comps, init) {}

  const SpacetimeGrid& grid() const { return *grid_; }
  bool has_grid() const { return grid_ != nullptr; }
  int comps() const { return comps_; }
  long nodes() const { return grid_->node_count(); }

  double& at(long node, int c = 0) { return data_[static_cast<std::size_t>(node) * comps_ + c]; }
  double at(long node, int c = 0) const { return data_[static_cast<std::size_t>(node) * comps_ + c]; }
  double& operator[](long i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](long i) const { return data_[static_cast<std::size_t>(i)]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  void require_same_grid(const Field& o) const {
    if (grid_ == nullptr || o.grid_ == nullptr || !grid_->same_layout(*o.grid_))
      throw std::invalid_argument("field: grid mismatch");
  }

 private:
  const SpacetimeGrid* grid_ = nullptr;
  int comps_ = 1;
  std::vector<double> data_;
};

using ScalarField = Field;

// Packed symmetric index for an m x m tensor: (a,b) with a <= b.
inline int sym_index(int a, int b, int m) {
  if (a > b) { int t = a; a = b; b = t; }
  return a * m - a * (a - 1) / 2 + (b - a);
}
inline int sym_count(int m) { return m * (m + 1) / 2; }

inline Field make_scalar(const SpacetimeGrid& g) { return Field(g, 1); }
inline Field make_vector(const SpacetimeGrid& g) { return Field(g, g.m()); }
inline Field make_sym(const SpacetimeGrid& g) { return Field(g, sym_count(g.m())); }
inline Field make_christoffel(const SpacetimeGrid& g) {
  return Field(g, g.m() * sym_count(g.m()));
}

}  // namespace confwave
