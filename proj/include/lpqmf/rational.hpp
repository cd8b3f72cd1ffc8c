#pragma once

#include <utility>

#include "lpqmf/poly.hpp"

namespace lpqmf {

/// Rational transfer function H(z) = num(z) / den(z).
///
/// Filters produced by the constructors in design.hpp are coprime, have
/// den(1) != 0 and no denominator root on the unit circle, and are
/// normalized so that H(1) = 1.  Derived filters (e.g. the high-pass
/// companion) share the representation without the normalization.
class RationalFilter {
 public:
  RationalFilter() : num_(RealPoly::one()), den_(RealPoly::one()) {}
  RationalFilter(RealPoly num, RealPoly den);

  const RealPoly& num() const { return num_; }
  const RealPoly& den() const { return den_; }
  int order() const;

  Complex eval(Complex z) const { return num_.eval(z) / den_.eval(z); }
  /// Frequency response value m0(xi) = H(e^{-i xi}).
  Complex response(double xi) const;

  bool is_polynomial() const { return den_.is_constant(); }

 private:
  RealPoly num_;
  RealPoly den_;
};

/// Checks the representation invariants of a filter loaded from
/// untrusted coefficients: nonzero denominator, den(1) != 0, numerical
/// coprimality, and no denominator root on the unit circle.  Throws
/// ValidationError / RealizabilityError naming the violated invariant.
void validate_filter(const RationalFilter& h);

/// Largest deviations of the two symmetric-filter identities over a fixed
/// 256-point grid on and off the unit circle, normalized by the magnitude of
/// the values involved: first H(z)^2 + H(-z)^2 = 1, second H(z) = H(1/z).
std::pair<double, double> symmetry_residuals(const RationalFilter& h);

}  // namespace lpqmf
