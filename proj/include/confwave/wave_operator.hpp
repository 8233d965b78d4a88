#pragma once

#include <cstdint>
#include <string>

#include "confwave/metric.hpp"
#include "confwave/stencils.hpp"

namespace confwave {

// box_g u = -|g|^{-1/2} d_a(|g|^{1/2} g^{ab} d_b u), sign fixed so that
// box_eta = dt^2 - Laplacian. For the product family this is
//   [ dt(W dt u) - div(V grad u) ] / (c^{m/2} a^{n/2})
// evaluated here in product-rule form with the stencils of stencils.hpp.
Field wave_operator_residual(const MetricSpec& g, const Field& u,
                             Exec exec = Exec::parallel);

// Appendix quadratic: for random nodes and random covectors xi linearly
// independent of dtau (= dt), checks b^2 - 4ac > 0 where a = g(dtau,dtau),
// b = 2 g(xi,dtau), c = g(xi,xi) with the inverse metric.
struct HyperbolicityReport {
  long samples = 0;
  long rejected = 0;      // degenerate draws skipped after 100 retries
  double min_discriminant = 0;
  bool pass = false;
  std::string metric_id;
};

HyperbolicityReport strict_hyperbolicity_check(const MetricSpec& g,
                                               const SpacetimeGrid& grid,
                                               long samples, std::uint64_t seed);

}  // namespace confwave
