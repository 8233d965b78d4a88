#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace confwave {

// p = 2(n+1)/(n-1), kept exact. p-2 = 4/(n-1).
struct Rational {
  long num = 0, den = 1;
  double value() const { return static_cast<double>(num) / den; }
  Rational reduced() const {
    long g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
  }
};

inline Rational exponent_p(int n) {
  if (n <= 1) throw std::invalid_argument("exponent_p: requires n >= 2");
  return Rational{2L * (n + 1), static_cast<long>(n - 1)}.reduced();
}
inline Rational exponent_p_minus_2(int n) {
  if (n <= 1) throw std::invalid_argument("exponent_p: requires n >= 2");
  return Rational{4, static_cast<long>(n - 1)}.reduced();
}

// C0-infinity mollifier profile H(s) = A exp(1/(((s-s0)/w)^2 - 1)) on
// |s-s0| < w, zero elsewhere. Nonnegative, peak A/e at s0.
struct BumpProfile {
  double amplitude = 1.0;  // A >= 0
  double width = 1.0;      // w > 0
  double center = 0.0;     // s0

  BumpProfile() = default;
  BumpProfile(double A, double w, double s0 = 0.0)
      : amplitude(A), width(w), center(s0) {
    if (A < 0) throw std::invalid_argument("bump: amplitude must be >= 0");
    if (!(w > 0)) throw std::invalid_argument("bump: width must be > 0");
  }

  double peak() const { return amplitude * std::exp(-1.0); }

  double value(double s) const {
    const double z = (s - center) / width;
    if (std::abs(z) >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 / (z * z - 1.0));
  }
  double deriv(double s) const {
    const double z = (s - center) / width;
    if (std::abs(z) >= 1.0) return 0.0;
    const double q = z * z - 1.0;
    return amplitude * std::exp(1.0 / q) * (-2.0 * z / (q * q)) / width;
  }
  double deriv2(double s) const {
    const double z = (s - center) / width;
    if (std::abs(z) >= 1.0) return 0.0;
    const double q = z * z - 1.0;
    const double g1 = -2.0 * z / (q * q);
    const double g1p = (6.0 * z * z + 2.0) / (q * q * q);
    return amplitude * std::exp(1.0 / q) * (g1 * g1 + g1p) / (width * width);
  }
};

// Smooth scalar function of a space-time point with exact first and second
// derivatives; index 0 is time.
class AnalyticScalar {
 public:
  virtual ~AnalyticScalar() = default;
  virtual int n() const = 0;  // spatial dimension
  virtual double value(double t, std::span<const double> x) const = 0;
  // out has size m = n+1, components (d/dt, d/dx1, ..., d/dxn).
  virtual void grad(double t, std::span<const double> x, std::span<double> out) const = 0;
  // out has size m*m row-major.
  virtual void hess(double t, std::span<const double> x, std::span<double> out) const = 0;
};

// f(t,x) = 1 + H((x-x0).theta - (t-t0)); solves box_eta f = 0 exactly since
// the phase is lightlike. f >= 1 everywhere.
class PlaneWaveFactor : public AnalyticScalar {
 public:
  PlaneWaveFactor(std::span<const double> theta, std::span<const double> x0,
                  double t0, BumpProfile profile);

  int n() const override { return static_cast<int>(theta_.size()); }
  double phase(double t, std::span<const double> x) const;
  double value(double t, std::span<const double> x) const override;
  void grad(double t, std::span<const double> x, std::span<double> out) const override;
  void hess(double t, std::span<const double> x, std::span<double> out) const override;

  const std::vector<double>& theta() const { return theta_; }
  const std::vector<double>& x0() const { return x0_; }
  double t0() const { return t0_; }
  const BumpProfile& profile() const { return profile_; }
  // d(phase)/d(t,x) = (-1, theta).
  double phase_grad(int a) const { return a == 0 ? -1.0 : theta_[a - 1]; }

 private:
  std::vector<double> theta_, x0_;
  double t0_;
  BumpProfile profile_;
};

// Spatial function with exact derivatives, used for the static base factor
// a(x) and for test fields.
class SpatialAnalytic {
 public:
  virtual ~SpatialAnalytic() = default;
  virtual int n() const = 0;
  virtual double value(std::span<const double> x) const = 0;
  virtual void grad(std::span<const double> x, std::span<double> out) const = 0;   // size n
  virtual void hess(std::span<const double> x, std::span<double> out) const = 0;   // n*n row-major
};

// a(x) = 1 + A exp(-|x - c|^2 / s2), strictly positive for A > -1.
class GaussianBumpSpatial : public SpatialAnalytic {
 public:
  GaussianBumpSpatial(double A, double s2, std::span<const double> center)
      : A_(A), s2_(s2), c_(center.begin(), center.end()) {
    if (!(s2 > 0)) throw std::invalid_argument("gaussian: s2 must be > 0");
    if (A <= -1.0) throw std::invalid_argument("gaussian: amplitude must exceed -1");
  }
  int n() const override { return static_cast<int>(c_.size()); }
  double value(std::span<const double> x) const override {
    return 1.0 + A_ * std::exp(-r2(x) / s2_);
  }
  void grad(std::span<const double> x, std::span<double> out) const override {
    const double e = A_ * std::exp(-r2(x) / s2_);
    for (int i = 0; i < n(); ++i) out[i] = e * (-2.0 * (x[i] - c_[i]) / s2_);
  }
  void hess(std::span<const double> x, std::span<double> out) const override {
    const int nn = n();
    const double e = A_ * std::exp(-r2(x) / s2_);
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j) {
        double v = e * (4.0 * (x[i] - c_[i]) * (x[j] - c_[j]) / (s2_ * s2_));
        if (i == j) v -= e * 2.0 / s2_;
        out[i * nn + j] = v;
      }
  }

 private:
  double r2(std::span<const double> x) const {
    double s = 0;
    for (int i = 0; i < n(); ++i) s += (x[i] - c_[i]) * (x[i] - c_[i]);
    return s;
  }
  double A_, s2_;
  std::vector<double> c_;
};

}  // namespace confwave
