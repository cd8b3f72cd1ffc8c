#pragma once

#include <utility>
#include <vector>

#include "lpqmf/rational.hpp"

namespace lpqmf {

struct CohenResult {
  bool pass = true;
  /// Invariant doubling-map cycle on which the shifted response vanishes;
  /// present exactly when pass is false.
  std::vector<double> witness;
};

struct FilterGeometry {
  bool poles_imaginary = true;
  /// Unit-circle zero angles in (pi/2, pi], one entry per conjugate pair.
  std::vector<double> stopband_zeros;
};

/// Everything the verification pass measures about one filter.
struct FilterReport {
  double qmf_residual = 0.0;
  double sym_residual = 0.0;
  int wavelet_moments = 0;
  int scaling_moments = 0;
  CohenResult cohen;
  double min_response = 0.0;
  bool poles_imaginary = true;
  std::vector<double> stopband_zeros;

  bool passes() const {
    return qmf_residual <= 1e-9 && sym_residual <= 1e-9 && cohen.pass;
  }
};

/// Max over the circle grid of |H(z) H(1/z) + H(-z) H(-1/z) - 1|.
/// Throws RealizabilityError when a grid point hits a pole.
double qmf_residual(const RationalFilter& h, int grid = 4096);

/// Max deviation of the two symmetric-filter identities on the mixed grid;
/// values <= 1e-9 classify the filter as symmetric.
double check_sym(const RationalFilter& h);

/// (M, N): multiplicity of -1 as a zero of the numerator, and of 1 as a zero
/// of the numerator of 1 - H.  Requires H(1) = 1.
std::pair<int, int> vanishing_moments(const RationalFilter& h);

/// Exact cycle search on the finite set of angles where the shifted response
/// vanishes; fails iff a nontrivial doubling-map cycle of length <= max_cycle
/// exists, returning the cycle as witness.
CohenResult cohen_check(const RationalFilter& h, int max_cycle = 16);

/// Minimum of the frequency response over (-pi, pi), endpoints excluded.
double positivity_check(const RationalFilter& h, int grid = 4096);

/// Pole/zero geometry: purely imaginary poles and stopband zero angles.
FilterGeometry geometry_report(const RationalFilter& h);

/// Runs every check and assembles the report.
FilterReport analyze(const RationalFilter& h, int grid = 4096, int max_cycle = 16);

}  // namespace lpqmf
