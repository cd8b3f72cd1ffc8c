#pragma once

#include <vector>

#include "lpqmf/poly.hpp"
#include "lpqmf/rational.hpp"

namespace lpqmf {

struct CascadeFactor {
  int level = 1;  // the factor enters the product as f(z^(2^level))
  RealPoly f;
};

/// FIR cascade F(z) = z^(-shift_n) P(z) prod_k F_k(z^(2^k)) approximating a
/// realizable symmetric filter on the unit circle to relative accuracy
/// `achieved` <= `epsilon`.  Every factor is palindromic; the flattened
/// product carries an implicit linear-phase delay of product_degree()/2.
struct FirCascade {
  int shift_n = 0;
  RealPoly prefactor;  // P, scaled to 2^(-deg) times the numerator
  std::vector<CascadeFactor> factors;
  double epsilon = 0.0;
  double achieved = 0.0;

  int top_level() const;
  /// deg P + sum_k 2^level_k * deg F_k.
  int product_degree() const;
  /// Integer group delay of the flattened filter relative to the target:
  /// product_degree()/2 - shift_n.
  int delay() const;
  /// z^(-shift_n) P(z) prod F_k(z^(2^k)), evaluated in factored form.
  Complex eval(Complex z) const;
};

/// Builds the cascade for H = P/Q with even Q, pairing denominator roots
/// (q, 1/q) and expanding each 1/(1-u) as prod (1+u^(2^k)).  Pairs leave the
/// product at the level where their contribution falls below the accuracy
/// budget; the top level is verified against an 8192-point circle grid and
/// raised until the relative error meets epsilon.
FirCascade fir_approximate(const RationalFilter& h, double epsilon);

/// Literal expanded product as a Laurent polynomial.
LaurentPoly flatten(const FirCascade& f);

/// sup over the circle grid of |F(w) F(1/w) + F(-w) F(-1/w) - 1|.
double qmf_defect(const FirCascade& f, int grid = 8192);

struct Signal {
  std::vector<double> samples;
};

/// Two-channel analysis/synthesis round trip with circular convolution and
/// 2-fold decimation; the high channel uses the modulated flattened filter.
/// Returns the max absolute reconstruction error.  The signal length must be
/// even and at least 4.
double filterbank_roundtrip(const FirCascade& f, const Signal& x);

}  // namespace lpqmf
