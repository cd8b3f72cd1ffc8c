#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace lpqmf {

using Complex = std::complex<double>;

/// Dense real-coefficient polynomial; coefficient k multiplies z^k.
///
/// Canonical form: the highest stored coefficient is nonzero, or the
/// coefficient vector is exactly {0} for the zero polynomial.  Construction
/// strips near-zero coefficients at the top end only (relative threshold
/// 1e-13); interior small coefficients are kept, they carry information.
class RealPoly {
 public:
  RealPoly() : coeffs_{0.0} {}
  explicit RealPoly(std::vector<double> coeffs);

  static RealPoly constant(double c) { return RealPoly({c}); }
  static RealPoly one() { return RealPoly({1.0}); }
  /// Keeps tiny leading coefficients literally; only exact zeros at the top
  /// end are stripped.  For coefficient sets whose small outer entries carry
  /// structure (cascade factors), where the relative threshold of the
  /// canonicalizing constructor would change the degree.
  static RealPoly raw(std::vector<double> coeffs);
  /// c * z^degree
  static RealPoly monomial(int degree, double c = 1.0);
  /// (a + b z)^n expanded through the binomial theorem.
  static RealPoly binomial_power(double a, double b, int n);

  const std::vector<double>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  bool is_constant() const { return coeffs_.size() == 1; }

  /// Coefficient of z^k; zero outside the stored range.
  double operator[](int k) const;
  double leading() const { return coeffs_.back(); }
  double norm_inf() const;
  double norm_one() const;

  /// Horner evaluation.
  Complex eval(Complex z) const;
  double eval(double x) const;

  RealPoly derivative() const;
  /// z^degree * p(1/z)
  RealPoly reciprocal() const;
  /// p(-z)
  RealPoly negated_argument() const;
  /// p(z^k), k >= 1
  RealPoly dilated(int k) const;

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(double s, const RealPoly& p);
  RealPoly operator-() const { return -1.0 * *this; }

 private:
  std::vector<double> coeffs_;
};

/// Laurent polynomial: coeffs()[j] multiplies z^(low+j).
///
/// Canonical form keeps the first and last stored coefficients nonzero
/// (or a single zero entry at exponent 0 for the zero element).
class LaurentPoly {
 public:
  LaurentPoly() : low_(0), coeffs_{0.0} {}
  LaurentPoly(int low, std::vector<double> coeffs);
  explicit LaurentPoly(const RealPoly& p) : LaurentPoly(0, p.coeffs()) {}

  /// Keeps tiny end coefficients literally; only exact zeros are stripped.
  static LaurentPoly raw(int low, std::vector<double> coeffs);

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  double norm_inf() const;
  /// Coefficient of z^k; zero outside the stored range.
  double coefficient(int k) const;

  /// Throws PoleError when z = 0 and negative exponents are present.
  Complex eval(Complex z) const;
  double eval(double x) const;

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

 private:
  int low_;
  std::vector<double> coeffs_;
};

/// Quotient and remainder of dense polynomial division.
std::pair<RealPoly, RealPoly> divrem(const RealPoly& a, const RealPoly& b);

/// Monic approximate GCD via a normalized Euclidean remainder sequence.
/// Remainders falling below tol relative to the larger input are treated as
/// zero; returns the constant 1 when the inputs share no root within
/// tolerance.  Throws ValidationError when both inputs are zero.
RealPoly poly_gcd(const RealPoly& a, const RealPoly& b, double tol = 1e-8);

/// True iff coeffs[k] == coeffs[degree-k] for all k, within tol relative to
/// the coefficient norm.
bool is_palindromic(const RealPoly& p, double tol = 1e-10);

/// Taylor coefficients of p about z0 (repeated synthetic division), so that
/// p(z) = sum_k result[k] (z - z0)^k.
std::vector<Complex> taylor_at(const RealPoly& p, Complex z0);

/// Deflate p by (z - x0)^k for real x0; the remainder of each division is
/// discarded.
RealPoly deflate_real_root(const RealPoly& p, double x0, int k);

}  // namespace lpqmf
