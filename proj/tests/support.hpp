#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "lpqmf/design.hpp"
#include "lpqmf/rational.hpp"

namespace support {

using lpqmf::Complex;
using lpqmf::PreimageSpec;
using lpqmf::RationalFilter;

inline constexpr double kPi = std::numbers::pi;

/// Largest coefficient deviation between two filters after scaling both
/// denominators to unit max-norm with positive value at 1.
inline double filter_deviation(const RationalFilter& a, const RationalFilter& b) {
  auto normalize = [](const RationalFilter& h) {
    double s = 1.0 / h.den().norm_inf();
    if (h.den().eval(1.0) < 0.0) s = -s;
    return std::pair{s * h.num(), s * h.den()};
  };
  auto [an, ad] = normalize(a);
  auto [bn, bd] = normalize(b);
  double dev = 0.0;
  for (int k = 0; k <= std::max(an.degree(), bn.degree()); ++k)
    dev = std::max(dev, std::abs(an[k] - bn[k]));
  for (int k = 0; k <= std::max(ad.degree(), bd.degree()); ++k)
    dev = std::max(dev, std::abs(ad[k] - bd[k]));
  return dev;
}

/// Multiset match: worst distance when greedily pairing each expected value
/// with the nearest unused computed value.  Size mismatch returns infinity.
inline double match_roots(const std::vector<Complex>& expected, std::vector<Complex> computed) {
  if (expected.size() != computed.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(computed.size(), false);
  double worst = 0.0;
  for (const Complex& e : expected) {
    double best = std::numeric_limits<double>::infinity();
    size_t best_i = 0;
    for (size_t i = 0; i < computed.size(); ++i) {
      if (used[i]) continue;
      double d = std::abs(e - computed[i]);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    used[best_i] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

/// Random valid preimage spec.  Entries are kept away from the degenerate
/// values so the constructions stay well conditioned; with
/// right_half_plane set, every lambda has positive real part.
inline PreimageSpec random_spec(std::mt19937& rng, bool right_half_plane = false) {
  std::uniform_int_distribution<int> m_dist(1, 3);
  std::uniform_int_distribution<int> r_dist(0, 2);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  PreimageSpec spec;
  spec.m = m_dist(rng);
  spec.sign_at_i = unif(rng) < 0.5 ? 1 : -1;
  int blocks = r_dist(rng);
  for (int b = 0; b < blocks; ++b) {
    std::vector<Complex> block;
    switch (kind(rng)) {
      case 0: {  // real lambda off the unit circle, away from the pole of the map at 1
        double mag = 1.7 + 2.0 * unif(rng);
        double s = (!right_half_plane && unif(rng) < 0.3) ? -1.0 : 1.0;
        block.push_back(Complex(s * mag, 0.0));
        break;
      }
      case 1: {  // unit-circle lambda -e^{i theta}, theta in the stopband
        double theta = kPi / 2.0 + 0.15 + (kPi / 2.0 - 0.3) * unif(rng);
        block.push_back(-std::polar(1.0, theta));
        break;
      }
      default: {  // complex conjugate pair off the circle
        double mag = 1.4 + 1.5 * unif(rng);
        double lo = 0.35;
        double hi = right_half_plane ? kPi / 2.0 - 0.15 : kPi - 0.4;
        double arg = lo + (hi - lo) * unif(rng);
        Complex l = std::polar(mag, arg);
        block.push_back(l);
        block.push_back(std::conj(l));
        break;
      }
    }
    // Drop whole blocks on accidental negation/reciprocal collisions so the
    // eta multiset stays conjugate closed; rare with the ranges above.
    bool ok = true;
    for (const Complex& l : block)
      for (const Complex& p : spec.lambdas)
        if (std::abs(l + p) < 1e-3 || std::abs(l * p + 1.0) < 1e-3 ||
            (std::abs(l * p - 1.0) < 1e-3 && std::abs(l - p) > 1e-3))
          ok = false;
    if (ok) spec.lambdas.insert(spec.lambdas.end(), block.begin(), block.end());
  }
  return spec;
}

}  // namespace support
