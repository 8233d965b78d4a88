#include "confwave/wave_operator.hpp"

#include <cmath>
#include <limits>
#include <random>

namespace confwave {

Field wave_operator_residual(const MetricSpec& g, const Field& u, Exec exec) {
  if (u.comps() != 1) throw std::invalid_argument("box: scalar field expected");
  const SpacetimeGrid& grid = u.grid();
  if (grid.n() != g.n()) throw std::invalid_argument("box: grid/metric dimension mismatch");
  const Field W = g.eval_W(grid, exec);
  const Field V = g.eval_V(grid, exec);
  const Field norm = g.eval_norm(grid, exec);

  Field acc(grid, 1);
  {
    Field ut = d1_axis(u, 0, exec);
    Field utt = d2_axis(u, 0, exec);
    Field Wt = d1_axis(W, 0, exec);
    for_each_node(grid.node_count(), exec, [&](long i) {
      acc[i] = W[i] * utt[i] + Wt[i] * ut[i];
    });
  }
  for (int ax = 1; ax <= grid.n(); ++ax) {
    Field ua = d1_axis(u, ax, exec);
    Field uaa = d2_axis(u, ax, exec);
    Field Va = d1_axis(V, ax, exec);
    for_each_node(grid.node_count(), exec, [&](long i) {
      acc[i] -= V[i] * uaa[i] + Va[i] * ua[i];
    });
  }
  for (long i = 0; i < grid.node_count(); ++i)
    if (!(norm[i] > 0))
      throw std::runtime_error("box: non-positive metric density (c or a <= 0)");
  for_each_node(grid.node_count(), exec, [&](long i) { acc[i] /= norm[i]; });
  return acc;
}

HyperbolicityReport strict_hyperbolicity_check(const MetricSpec& g,
                                               const SpacetimeGrid& grid,
                                               long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("hyperbolicity: samples must be >= 1");
  HyperbolicityReport rep;
  rep.metric_id = g.id();
  rep.min_discriminant = std::numeric_limits<double>::infinity();
  const int n = grid.n(), m = n + 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> node_dist(0, grid.node_count() - 1);
  std::normal_distribution<double> gauss(0.0, 1.0);

  const Field c = g.eval_c(grid, Exec::serial);
  const long S = grid.spatial_count();

  for (long s = 0; s < samples; ++s) {
    const long node = node_dist(rng);
    double x[8];
    grid.coords(node % S, std::span<double>(x, n));
    const double cv = c[node];
    const double av = g.a_at(std::span<const double>(x, n));
    // inverse metric: g^{00} = -1/c, g^{ii} = 1/(c a)
    const double g00 = -1.0 / cv, gii = 1.0 / (cv * av);

    // rejection-sample a covector with nontrivial spatial part
    double xi[8];
    bool ok = false;
    for (int tries = 0; tries < 100 && !ok; ++tries) {
      double sp = 0;
      for (int a2 = 0; a2 < m; ++a2) xi[a2] = gauss(rng);
      for (int a2 = 1; a2 < m; ++a2) sp += xi[a2] * xi[a2];
      ok = std::sqrt(sp) >= 1e-6;
    }
    if (!ok) {
      ++rep.rejected;
      continue;
    }
    // dtau = dt covector (1,0,...,0)
    const double a = g00;
    const double b = 2.0 * g00 * xi[0];
    double cq = g00 * xi[0] * xi[0];
    for (int a2 = 1; a2 < m; ++a2) cq += gii * xi[a2] * xi[a2];
    const double disc = b * b - 4.0 * a * cq;
    if (disc < rep.min_discriminant) rep.min_discriminant = disc;
    ++rep.samples;
  }
  rep.pass = rep.samples > 0 && rep.min_discriminant > 0.0;
  return rep;
}

}  // namespace confwave
