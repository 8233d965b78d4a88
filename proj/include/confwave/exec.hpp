#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace confwave {

// Execution policy for node-parallel kernels. Serial is the reference path;
// kernels must produce bitwise-identical results under either policy
// (pointwise maps, max/min reductions, or fixed-order sums only).
enum class Exec { serial, parallel };

template <class F>
inline void for_each_node(long count, Exec exec, F&& body) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) body(i);
  } else {
    for (long i = 0; i < count; ++i) body(i);
  }
}

// Order-independent max reduction (FP max is associative and commutative).
template <class F>
inline double max_abs_over(long count, Exec exec, F&& value_at) {
  double m = 0.0;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static) reduction(max : m)
    for (long i = 0; i < count; ++i) {
      double v = value_at(i);
      if (v < 0) v = -v;
      if (v > m) m = v;
    }
  } else {
    for (long i = 0; i < count; ++i) {
      double v = value_at(i);
      if (v < 0) v = -v;
      if (v > m) m = v;
    }
  }
  return m;
}

// Deterministic pairwise summation; independent of thread count by design
// (always serial tree over a fixed index order).
inline double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

template <class F>
inline double pairwise_sum_of(long count, F&& value_at) {
  std::vector<double> tmp(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) tmp[static_cast<std::size_t>(i)] = value_at(i);
  return pairwise_sum(tmp);
}

}  // namespace confwave
