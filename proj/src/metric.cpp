#include "confwave/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace confwave {

MetricSpec MetricSpec::minkowski(int n) {
  if (n < 1) throw std::invalid_argument("metric: n must be >= 1");
  MetricSpec g;
  g.kind_ = MetricKind::minkowski;
  g.n_ = n;
  g.id_ = "minkowski";
  return g;
}

MetricSpec MetricSpec::static_base(int n, std::shared_ptr<const SpatialAnalytic> a,
                                   std::string id) {
  MetricSpec g = minkowski(n);
  if (a && a->n() != n) throw std::invalid_argument("metric: a(x) dimension mismatch");
  g.kind_ = MetricKind::conformal_static_base;
  g.a_ = std::move(a);
  g.id_ = std::move(id);
  return g;
}

MetricSpec MetricSpec::conformal(const MetricSpec& base,
                                 std::shared_ptr<const AnalyticScalar> f,
                                 double expo, std::string id) {
  if (!base.c_is_unity())
    throw std::invalid_argument("metric: base must have unit conformal factor");
  if (f && f->n() != base.n()) throw std::invalid_argument("metric: factor dimension mismatch");
  MetricSpec g = base;
  g.kind_ = base.a_is_unity() ? MetricKind::conformal_minkowski
                              : MetricKind::conformal_static_base;
  g.f_ = std::move(f);
  g.expo_ = expo;
  g.id_ = id.empty() ? base.id() + "*f^" + std::to_string(expo) : std::move(id);
  return g;
}

MetricSpec MetricSpec::conformal_gridded(const MetricSpec& base,
                                         std::shared_ptr<const Field> f_values,
                                         double expo, std::string id) {
  if (!base.c_is_unity())
    throw std::invalid_argument("metric: base must have unit conformal factor");
  if (f_values && f_values->comps() != 1)
    throw std::invalid_argument("metric: gridded factor must be scalar");
  MetricSpec g = base;
  g.kind_ = base.a_is_unity() ? MetricKind::conformal_minkowski
                              : MetricKind::conformal_static_base;
  g.f_grid_ = std::move(f_values);
  g.expo_ = expo;
  g.id_ = id.empty() ? base.id() + "*fgrid^" + std::to_string(expo) : std::move(id);
  return g;
}

double MetricSpec::f_at(double t, std::span<const double> x) const {
  if (f_) return f_->value(t, x);
  if (f_grid_) throw std::logic_error("metric: gridded factor has no point evaluation");
  return 1.0;
}

double MetricSpec::c_at(double t, std::span<const double> x) const {
  // Positivity is enforced by validate_on; a non-positive factor yields NaN
  // here, which validate_on rejects.
  return c_is_unity() ? 1.0 : std::pow(f_at(t, x), expo_);
}

double MetricSpec::a_at(std::span<const double> x) const {
  return a_ ? a_->value(x) : 1.0;
}

double MetricSpec::h_at(double t, std::span<const double> x) const {
  if (c_is_unity()) return 0.0;
  return 0.5 * expo_ * std::log(f_at(t, x));
}

void MetricSpec::h_derivs(double t, std::span<const double> x,
                          std::span<double> dh, std::span<double> d2h) const {
  const int mm = m();
  if (c_is_unity()) {
    for (int a = 0; a < mm; ++a) dh[a] = 0.0;
    for (int a = 0; a < mm * mm; ++a) d2h[a] = 0.0;
    return;
  }
  if (!f_) throw std::logic_error("metric: analytic factor required for h derivatives");
  const double f = f_->value(t, x);
  std::vector<double> df(mm), d2f(mm * mm);
  f_->grad(t, x, df);
  f_->hess(t, x, d2f);
  const double k = 0.5 * expo_;
  for (int a = 0; a < mm; ++a) dh[a] = k * df[a] / f;
  for (int a = 0; a < mm; ++a)
    for (int b = 0; b < mm; ++b)
      d2h[a * mm + b] = k * (d2f[a * mm + b] / f - df[a] * df[b] / (f * f));
}

namespace {

template <class FAt>
Field eval_pointwise(const SpacetimeGrid& g, Exec exec, FAt&& fn) {
  Field out(g, 1);
  const long S = g.spatial_count();
  for_each_node(g.node_count(), exec, [&](long node) {
    const int k = static_cast<int>(node / S);
    const long s = node % S;
    double x[8];
    g.coords(s, std::span<double>(x, g.n()));
    out[node] = fn(g.tcoord(k), std::span<const double>(x, g.n()));
  });
  return out;
}

}  // namespace

Field MetricSpec::eval_f(const SpacetimeGrid& g, Exec exec) const {
  if (f_grid_) {
    f_grid_->require_same_grid(Field(g, 1));
    Field out = *f_grid_;
    return out;
  }
  return eval_pointwise(g, exec, [&](double t, std::span<const double> x) {
    return f_ ? f_->value(t, x) : 1.0;
  });
}

Field MetricSpec::eval_c(const SpacetimeGrid& g, Exec exec) const {
  if (f_grid_) {
    Field out(g, 1);
    f_grid_->require_same_grid(out);
    const Field& f = *f_grid_;
    for_each_node(g.node_count(), exec,
                  [&](long i) { out[i] = std::pow(f[i], expo_); });
    return out;
  }
  return eval_pointwise(g, exec,
                        [&](double t, std::span<const double> x) { return c_at(t, x); });
}

Field MetricSpec::eval_a(const SpacetimeGrid& g, Exec exec) const {
  return eval_pointwise(g, exec,
                        [&](double, std::span<const double> x) { return a_at(x); });
}

namespace {
// W, V, norm exponents for c and a.
struct CoeffPow { double pc, pa; };
inline CoeffPow powers_W(int n) { return {0.5 * (n - 1), 0.5 * n}; }
inline CoeffPow powers_V(int n) { return {0.5 * (n - 1), 0.5 * n - 1.0}; }
inline CoeffPow powers_norm(int n) { return {0.5 * (n + 1), 0.5 * n}; }
}  // namespace

static Field eval_coeff(const MetricSpec& msp, const SpacetimeGrid& g, Exec exec,
                        CoeffPow P) {
  Field c = msp.eval_c(g, exec);
  Field out(g, 1);
  const long S = g.spatial_count();
  for_each_node(g.node_count(), exec, [&](long node) {
    double x[8];
    g.coords(node % S, std::span<double>(x, g.n()));
    const double a = msp.a_at(std::span<const double>(x, g.n()));
    out[node] = std::pow(c[node], P.pc) * std::pow(a, P.pa);
  });
  return out;
}

Field MetricSpec::eval_W(const SpacetimeGrid& g, Exec exec) const {
  return eval_coeff(*this, g, exec, powers_W(n_));
}
Field MetricSpec::eval_V(const SpacetimeGrid& g, Exec exec) const {
  return eval_coeff(*this, g, exec, powers_V(n_));
}
Field MetricSpec::eval_norm(const SpacetimeGrid& g, Exec exec) const {
  return eval_coeff(*this, g, exec, powers_norm(n_));
}

double MetricSpec::W_at(double t, std::span<const double> x) const {
  const CoeffPow P = powers_W(n_);
  return std::pow(c_at(t, x), P.pc) * std::pow(a_at(x), P.pa);
}
double MetricSpec::V_at(double t, std::span<const double> x) const {
  const CoeffPow P = powers_V(n_);
  return std::pow(c_at(t, x), P.pc) * std::pow(a_at(x), P.pa);
}

void MetricSpec::validate_on(const SpacetimeGrid& g) const {
  if (g.n() != n_) throw std::invalid_argument("metric: grid dimension mismatch");
  Field c = eval_c(g, Exec::parallel);
  Field a = eval_a(g, Exec::parallel);
  for (long i = 0; i < g.node_count(); ++i) {
    if (!(c[i] > 0.0))
      throw std::runtime_error("metric: c <= 0 at a grid node (dt must stay timelike)");
    if (!(a[i] > 0.0)) throw std::runtime_error("metric: a <= 0 at a grid node");
  }
}

}  // namespace confwave
