#pragma once

#include <vector>

#include "lpqmf/cascade.hpp"
#include "lpqmf/rational.hpp"

namespace lpqmf {

/// Uniform grid of samples; abscissa i sits at x0 + i*dx.
struct SampledGrid {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;

  double x_at(int i) const { return x0 + dx * i; }
};

/// m0(xi) = H(e^{-i xi}) on xi = -pi + 2 pi i / points.  The response of a
/// symmetric filter is real; a residual imaginary part above 1e-10 raises
/// SymmetryError, a pole hit raises RealizabilityError.
SampledGrid freq_response(const RationalFilter& h, int points);

/// Scaling-function samples on the dyadic grid 2^-levels via cascade
/// iteration of the two-scale relation, started from the box indicator and
/// centered so the function is represented even about 0.
SampledGrid scaling_samples(const FirCascade& f, int levels);

/// Wavelet samples on the same dyadic grid, represented even about 1/2; the
/// high-pass coefficients come from modulating the flattened cascade.
SampledGrid wavelet_samples(const FirCascade& f, int levels);

/// Riemann sum of x^k against the grid values.
double moment_sum(const SampledGrid& g, int k);

}  // namespace lpqmf
