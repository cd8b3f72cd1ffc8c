#include "lpqmf/rational.hpp"

#include <algorithm>
#include <cmath>

#include "lpqmf/errors.hpp"
#include "lpqmf/roots.hpp"

namespace lpqmf {

RationalFilter::RationalFilter(RealPoly num, RealPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ValidationError("rational filter: zero denominator");
}

int RationalFilter::order() const { return std::max(num_.degree(), den_.degree()); }

Complex RationalFilter::response(double xi) const {
  return eval(std::polar(1.0, -xi));
}

std::pair<double, double> symmetry_residuals(const RationalFilter& h) {
  double d_squares = 0.0;
  double d_inverse = 0.0;
  auto visit = [&](Complex z) {
    Complex hz = h.eval(z);
    Complex hmz = h.eval(-z);
    Complex hiz = h.eval(1.0 / z);
    double s5 = std::abs(hz * hz + hmz * hmz - 1.0) /
                std::max({1.0, std::norm(hz), std::norm(hmz)});
    double s6 = std::abs(hz - hiz) / std::max({1.0, std::abs(hz), std::abs(hiz)});
    d_squares = std::max(d_squares, s5);
    d_inverse = std::max(d_inverse, s6);
  };
  constexpr double kPi = 3.141592653589793238462643383279502884;
  for (int k = 0; k < 128; ++k) visit(std::polar(1.0, 2.0 * kPi * (k + 0.5) / 128.0));
  for (int k = 0; k < 64; ++k) visit(std::polar(0.85, 2.0 * kPi * (k + 0.37) / 64.0));
  for (int k = 0; k < 64; ++k) visit(std::polar(1.0 / 0.85, 2.0 * kPi * (k + 0.81) / 64.0));
  return {d_squares, d_inverse};
}

void validate_filter(const RationalFilter& h) {
  if (h.num().is_zero()) throw ValidationError("filter invariant: zero numerator");
  if (std::abs(h.den().eval(1.0)) <= 1e-12 * h.den().norm_inf())
    throw ValidationError("filter invariant: denominator vanishes at z = 1");
  if (!h.den().is_constant()) {
    RealPoly g = poly_gcd(h.num(), h.den());
    if (g.degree() > 0) throw ValidationError("filter invariant: numerator and denominator share a factor");
    ComplexRootSet poles = poly_roots(h.den());
    for (const auto& r : poles.roots())
      if (std::abs(std::abs(r.value) - 1.0) <= 1e-6)
        throw RealizabilityError("filter invariant: denominator root on the unit circle");
  }
}

}  // namespace lpqmf
