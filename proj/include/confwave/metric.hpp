#pragma once

#include <memory>
#include <string>

#include "confwave/exec.hpp"
#include "confwave/factors.hpp"
#include "confwave/field.hpp"

namespace confwave {

enum class MetricKind { minkowski, conformal_minkowski, conformal_static_base };

// Lorentzian metrics of the product family g = c(t,x) (-dt^2 + a(x) dx^2)
// with c = f^expo for a positive factor f (analytic or gridded) and a(x) > 0
// static. Signature (-,+,...,+); coordinate 0 is time.
class MetricSpec {
 public:
  static MetricSpec minkowski(int n);
  static MetricSpec static_base(int n, std::shared_ptr<const SpatialAnalytic> a,
                                std::string id = "static-base");
  // c = f^expo over the given base (base must have c == 1).
  static MetricSpec conformal(const MetricSpec& base,
                              std::shared_ptr<const AnalyticScalar> f,
                              double expo, std::string id = "");
  static MetricSpec conformal_gridded(const MetricSpec& base,
                                      std::shared_ptr<const Field> f_values,
                                      double expo, std::string id = "");

  MetricKind kind() const { return kind_; }
  int n() const { return n_; }
  int m() const { return n_ + 1; }
  const std::string& id() const { return id_; }

  bool is_flat_minkowski() const {
    return kind_ == MetricKind::minkowski;
  }
  bool c_is_unity() const { return !f_ && !f_grid_; }
  bool c_is_analytic() const { return c_is_unity() || f_ != nullptr; }
  bool a_is_unity() const { return a_ == nullptr; }
  double conformal_exponent() const { return expo_; }
  std::shared_ptr<const AnalyticScalar> factor() const { return f_; }
  std::shared_ptr<const Field> factor_grid() const { return f_grid_; }
  std::shared_ptr<const SpatialAnalytic> spatial_profile() const { return a_; }

  // Point evaluation (analytic c path).
  double f_at(double t, std::span<const double> x) const;
  double c_at(double t, std::span<const double> x) const;
  double a_at(std::span<const double> x) const;

  // Conformal log-factor h with c = e^{2h} (h = (expo/2) ln f); exact
  // derivatives from the factor's. Sizes: dh m, d2h m*m row-major.
  double h_at(double t, std::span<const double> x) const;
  void h_derivs(double t, std::span<const double> x, std::span<double> dh,
                std::span<double> d2h) const;

  // Coefficient fields of the divergence form of box_g:
  //   W = c^{(m-2)/2} a^{n/2},  V = c^{(m-2)/2} a^{n/2-1},
  //   norm = c^{m/2} a^{n/2}  (so box_g u = [dt(W dt u) - div(V grad u)]/norm).
  Field eval_f(const SpacetimeGrid& g, Exec exec = Exec::parallel) const;
  Field eval_c(const SpacetimeGrid& g, Exec exec = Exec::parallel) const;
  Field eval_a(const SpacetimeGrid& g, Exec exec = Exec::parallel) const;
  Field eval_W(const SpacetimeGrid& g, Exec exec = Exec::parallel) const;
  Field eval_V(const SpacetimeGrid& g, Exec exec = Exec::parallel) const;
  Field eval_norm(const SpacetimeGrid& g, Exec exec = Exec::parallel) const;

  // Analytic point evaluation of the coefficients (needed at half steps).
  double W_at(double t, std::span<const double> x) const;
  double V_at(double t, std::span<const double> x) const;

  // Checks c > 0, a > 0 and g(dt,dt) = -c < 0 at every node; throws on
  // violation. Gridded factors additionally pin the metric to their grid.
  void validate_on(const SpacetimeGrid& g) const;

 private:
  MetricKind kind_ = MetricKind::minkowski;
  int n_ = 2;
  std::shared_ptr<const AnalyticScalar> f_;
  std::shared_ptr<const Field> f_grid_;
  double expo_ = 1.0;
  std::shared_ptr<const SpatialAnalytic> a_;
  std::string id_ = "minkowski";
};

}  // namespace confwave
