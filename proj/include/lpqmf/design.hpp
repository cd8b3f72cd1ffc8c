#pragma once

#include <vector>

#include "lpqmf/poly.hpp"
#include "lpqmf/rational.hpp"
#include "lpqmf/roots.hpp"

namespace lpqmf {

// Scalar Moebius-type maps underlying every construction here.

/// (1 - z)/(1 + z); an involution that carries the unit circle onto the
/// imaginary axis.  Throws PoleError at z = -1.
Complex bilinear(Complex z);
/// (z + 1/z)/2.  Throws PoleError at z = 0.
Complex joukowski(Complex z);
/// (z - 1/z)/2, the odd companion of joukowski().  Throws PoleError at z = 0.
Complex joukowski_odd(Complex z);
/// (1 + sqrt(2) z)/(1 + sqrt(2) z + z^2); satisfies k(z)^2 + k(1/z)^2 = 1.
Complex response_kernel(Complex z);

/// Even rational all-pass function with a pole at the origin,
///   a(z) = sign_at_i * (-1)^(m+r) * B(z^2) / (z^(2m) * rev(B)(z^2)),
/// where r = deg B.  The representation makes evenness and the all-pass
/// identity a(z) a(1/z) = 1 structural.
class AllPass {
 public:
  /// Validates m >= 1, B(0) != 0 and B coprime with its reciprocal.
  AllPass(int sign_at_i, int m, RealPoly b);

  int sign_at_i() const { return sign_at_i_; }
  /// Half the pole order at the origin.
  int m() const { return m_; }
  int r() const { return b_.degree(); }
  const RealPoly& b() const { return b_; }

  Complex eval(Complex z) const;

 private:
  int sign_at_i_;
  int m_;
  RealPoly b_;
};

/// Classifies a raw rational function as an even all-pass with a pole of
/// order >= 2 at the origin; throws ValidationError naming the failed
/// property otherwise.
AllPass allpass_from_rational(const RealPoly& num, const RealPoly& den);

/// Minimal parameter set of a symmetric filter: multiplicity 2m of the zero
/// at -1, the sign of H(i), and the preimages of one with reciprocals and
/// the point 1 discarded.
struct PreimageSpec {
  int m = 1;
  int sign_at_i = 1;
  std::vector<Complex> lambdas;
};

/// Throws ValidationError naming the violated invariant: forbidden value
/// (0, +-1, +-i), reciprocal pair, negation pair, or conjugate-closure
/// failure of {eta(lambda)}.
void validate_spec(const PreimageSpec& spec);

/// Replaces every lambda by the representative with |lambda| >= 1, and, for
/// entries on the unit circle, with Im(lambda) >= 0; sorts the entries.
PreimageSpec canonicalized(const PreimageSpec& spec);

/// Identifies the maximally flat filter of order 4n with sign (-1)^delta
/// at i.
struct MaxflatId {
  int n = 1;
  int delta = 0;
};

/// The symmetric filter associated to an even all-pass function.
RationalFilter build_from_allpass(const AllPass& a);

/// Inverse of build_from_allpass; throws SymmetryError when the input does
/// not satisfy the symmetric-filter identities.
AllPass extract_allpass(const RationalFilter& h);

/// Recovers (m, sign at i, Lambda) from a symmetric filter.
PreimageSpec extract_preimage_spec(const RationalFilter& h);

/// Builds the unique symmetric filter with the given preimages of one.
RationalFilter build_from_preimages(const PreimageSpec& spec);

/// Preimage spec realizing a prescribed stopband zero set: each angle theta
/// contributes the preimage -e^{i theta}.  Angles must lie strictly inside
/// (pi/2, pi); extra preimages must lie in the open right half plane off the
/// unit circle.
PreimageSpec stopband_spec(int m, int sign_at_i, const std::vector<double>& thetas,
                           const std::vector<Complex>& extra);

/// Prescribes the stopband zero set exactly: unit-circle zeros at
/// e^{+-i theta_k} plus the 2m zeros at -1, no others; all poles purely
/// imaginary.
RationalFilter design_stopband(int m, int sign_at_i, const std::vector<double>& thetas,
                               const std::vector<Complex>& extra);

/// Maximally flat filter: numerator (1+z)^{2n} ((1+z)^{2n} + s sqrt(2) (1-z)^{2n}),
/// denominator (1+z)^{4n} + (1-z)^{4n} + s sqrt(2) (1-z^2)^{2n}, s = (-1)^{delta+n}.
RationalFilter maxflat(MaxflatId id);

/// Closed-form zero set: -1 with multiplicity 2n plus the bilinear images of
/// 2^{-1/(4n)} e^{i pi (2j+n+delta-1)/(2n)}, -n < j <= n.
ComplexRootSet maxflat_zeros(MaxflatId id);

/// Closed-form pole set: +-i tan(pi (5+8j+4 delta+4n)/(16n)), -n < j <= n.
ComplexRootSet maxflat_poles(MaxflatId id);

/// Frequency response of maxflat(id) evaluated in closed form,
/// 1 - 1/(1/2 + (1/sqrt(2) + (-1)^delta cot^{2n}(xi/2))^2).
double maxflat_response(MaxflatId id, double xi);

/// High-pass companion G(z) = -z H(-1/z).
RationalFilter highpass(const RationalFilter& h);

/// Slope of the frequency response at xi = pi/2:
///   -(2 - sqrt(2) sign_at_i) (m + sum_j 1/eta(lambda_j)).
double transition_slope(const PreimageSpec& spec);

}  // namespace lpqmf
