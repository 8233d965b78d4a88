#include "confwave/factors.hpp"

#include <cmath>

namespace confwave {

PlaneWaveFactor::PlaneWaveFactor(std::span<const double> theta,
                                 std::span<const double> x0, double t0,
                                 BumpProfile profile)
    : theta_(theta.begin(), theta.end()),
      x0_(x0.begin(), x0.end()),
      t0_(t0),
      profile_(profile) {
  if (theta_.size() != x0_.size())
    throw std::invalid_argument("plane wave: theta/x0 size mismatch");
  double norm2 = 0;
  for (double c : theta_) norm2 += c * c;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
    throw std::invalid_argument("plane wave: theta must be a Euclidean unit vector");
}

double PlaneWaveFactor::phase(double t, std::span<const double> x) const {
  double p = -(t - t0_);
  for (std::size_t k = 0; k < theta_.size(); ++k)
    p += (x[k] - x0_[k]) * theta_[k];
  return p;
}

double PlaneWaveFactor::value(double t, std::span<const double> x) const {
  return 1.0 + profile_.value(phase(t, x));
}

void PlaneWaveFactor::grad(double t, std::span<const double> x,
                           std::span<double> out) const {
  const double Hp = profile_.deriv(phase(t, x));
  const int m = n() + 1;
  for (int a = 0; a < m; ++a) out[a] = Hp * phase_grad(a);
}

void PlaneWaveFactor::hess(double t, std::span<const double> x,
                           std::span<double> out) const {
  const double Hpp = profile_.deriv2(phase(t, x));
  const int m = n() + 1;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out[a * m + b] = Hpp * phase_grad(a) * phase_grad(b);
}

}  // namespace confwave
