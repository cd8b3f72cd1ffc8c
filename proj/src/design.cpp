#include "lpqmf/design.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpqmf/errors.hpp"

namespace lpqmf {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kPi = std::numbers::pi;
constexpr double kPointTol = 1e-9;

double parity_sign(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

bool near(Complex a, Complex b, double tol = kPointTol) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a));
}

// Exact averaging of mirrored coefficients; the products built here are
// palindromic in exact arithmetic, this removes the last-ulp asymmetry of
// the convolution order.
RealPoly symmetrized(const RealPoly& p) {
  std::vector<double> c = p.coeffs();
  size_t d = c.size() - 1;
  for (size_t k = 0; 2 * k < d; ++k) {
    double avg = 0.5 * (c[k] + c[d - k]);
    c[k] = avg;
    c[d - k] = avg;
  }
  return RealPoly(std::move(c));
}

// (1+z)^{2m} * prod_j (z^2 + 2 eta_j z + 1), conjugate eta pairs combined
// into real quartics.
RealPoly palindromic_from_etas(int m, const std::vector<Complex>& etas) {
  RealPoly a = RealPoly::binomial_power(1.0, 1.0, 2 * m);
  std::vector<bool> used(etas.size(), false);
  for (size_t j = 0; j < etas.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    const Complex& e = etas[j];
    if (std::abs(e.imag()) <= 1e-12 * (1.0 + std::abs(e))) {
      a = a * RealPoly({1.0, 2.0 * e.real(), 1.0});
      continue;
    }
    bool paired = false;
    for (size_t k = j + 1; k < etas.size(); ++k) {
      if (used[k]) continue;
      if (near(etas[k], std::conj(e))) {
        used[k] = true;
        paired = true;
        break;
      }
    }
    if (!paired) throw ValidationError("preimage spec: conjugate-closure failure in {eta(lambda)}");
    a = a * RealPoly({1.0, 4.0 * e.real(), 4.0 * std::norm(e) + 2.0, 4.0 * e.real(), 1.0});
  }
  return symmetrized(a);
}

RationalFilter filter_from_palindromic(const RealPoly& a, double sigma) {
  RealPoly at = a.negated_argument();
  RealPoly num = a * (a + (sigma * kSqrt2) * at);
  RealPoly den = a * a + at * at + (sigma * kSqrt2) * (a * at);
  return RationalFilter(symmetrized(num), symmetrized(den));
}

Complex eta_of(Complex lambda) { return 0.5 * (lambda + 1.0 / lambda); }

Complex canonical_lambda(Complex lambda) {
  double mod = std::abs(lambda);
  if (std::abs(mod - 1.0) <= kPointTol) {
    Complex unit = lambda / mod;
    return unit.imag() < 0.0 ? std::conj(unit) : unit;
  }
  return mod < 1.0 ? 1.0 / lambda : lambda;
}

}  // namespace

Complex bilinear(Complex z) {
  Complex d = 1.0 + z;
  if (d == Complex(0.0, 0.0)) throw PoleError("bilinear: pole at z = -1");
  return (1.0 - z) / d;
}

Complex joukowski(Complex z) {
  if (z == Complex(0.0, 0.0)) throw PoleError("joukowski: pole at z = 0");
  return 0.5 * (z + 1.0 / z);
}

Complex joukowski_odd(Complex z) {
  if (z == Complex(0.0, 0.0)) throw PoleError("joukowski_odd: pole at z = 0");
  return 0.5 * (z - 1.0 / z);
}

Complex response_kernel(Complex z) {
  Complex d = 1.0 + kSqrt2 * z + z * z;
  if (std::abs(d) <= 1e-15 * (1.0 + std::norm(z)))
    throw PoleError("response_kernel: pole (1 + sqrt(2) z + z^2 = 0)");
  return (1.0 + kSqrt2 * z) / d;
}

AllPass::AllPass(int sign_at_i, int m, RealPoly b)
    : sign_at_i_(sign_at_i), m_(m), b_(std::move(b)) {
  if (sign_at_i_ != 1 && sign_at_i_ != -1) throw ValidationError("all-pass: sign at i must be +-1");
  if (m_ < 1) throw ValidationError("invalid all-pass: pole at 0 must have multiplicity >= 2");
  if (b_.is_zero() || std::abs(b_[0]) <= 1e-12 * b_.norm_inf())
    throw ValidationError("all-pass: B must not vanish at 0");
  if (b_.degree() > 0 && poly_gcd(b_, b_.reciprocal()).degree() > 0)
    throw ValidationError("all-pass: B shares a root with its reciprocal");
}

Complex AllPass::eval(Complex z) const {
  if (z == Complex(0.0, 0.0)) throw PoleError("all-pass: pole at z = 0");
  Complex w = z * z;
  Complex den = std::pow(z, 2 * m_) * b_.reciprocal().eval(w);
  if (den == Complex(0.0, 0.0)) throw PoleError("all-pass: evaluation at a pole");
  double s = sign_at_i_ * parity_sign(m_ + r());
  return s * b_.eval(w) / den;
}

AllPass allpass_from_rational(const RealPoly& num, const RealPoly& den) {
  if (num.is_zero() || den.is_zero()) throw ValidationError("invalid all-pass: zero numerator or denominator");
  // Even: num(z) den(-z) - num(-z) den(z) must vanish identically.
  RealPoly cross = num * den.negated_argument() - num.negated_argument() * den;
  double scale = std::max(num.norm_inf() * den.norm_inf(), 1e-300);
  if (cross.norm_inf() > 1e-10 * scale)
    throw ValidationError("invalid all-pass: not an even function");
  // All-pass: |a| = 1 on the unit circle.
  for (int k = 0; k < 64; ++k) {
    Complex z = std::polar(1.0, 2.0 * kPi * (k + 0.5) / 64.0);
    Complex a = num.eval(z) / den.eval(z);
    Complex ai = num.eval(1.0 / z) / den.eval(1.0 / z);
    if (std::abs(a * ai - 1.0) > 1e-10)
      throw ValidationError("invalid all-pass: a(z) a(1/z) != 1");
  }
  // Pole order at the origin.
  int zeros_at_origin = 0;
  while (zeros_at_origin <= den.degree() &&
         std::abs(den[zeros_at_origin]) <= 1e-12 * den.norm_inf())
    ++zeros_at_origin;
  if (zeros_at_origin < 2)
    throw ValidationError("invalid all-pass: no pole of order >= 2 at the origin");
  int m = zeros_at_origin / 2;
  // B from the even numerator.
  std::vector<double> bc(static_cast<size_t>(num.degree() / 2) + 1, 0.0);
  for (size_t j = 0; j < bc.size(); ++j) bc[j] = num[static_cast<int>(2 * j)];
  RealPoly b(std::move(bc));
  Complex at_i = num.eval(Complex(0, 1)) / den.eval(Complex(0, 1));
  int sign = at_i.real() >= 0.0 ? 1 : -1;
  return AllPass(sign, m, b);
}

void validate_spec(const PreimageSpec& spec) {
  if (spec.m < 1) throw ValidationError("preimage spec: m must be >= 1");
  if (spec.sign_at_i != 1 && spec.sign_at_i != -1)
    throw ValidationError("preimage spec: sign at i must be +-1");
  const auto& ls = spec.lambdas;
  for (const Complex& l : ls) {
    if (std::abs(l) <= kPointTol || near(l, Complex(1, 0)) || near(l, Complex(-1, 0)) ||
        near(l, Complex(0, 1)) || near(l, Complex(0, -1)))
      throw ValidationError("preimage spec: forbidden value (lambda in {0, 1, -1, i, -i})");
  }
  for (size_t i = 0; i < ls.size(); ++i) {
    for (size_t j = i + 1; j < ls.size(); ++j) {
      if (near(ls[i], -ls[j]) || std::abs(ls[i] * ls[j] + 1.0) <= kPointTol * (1.0 + std::abs(ls[i] * ls[j])))
        throw ValidationError("preimage spec: negation pair (lambda_i = -lambda_j or lambda_i lambda_j = -1)");
      if (std::abs(ls[i] * ls[j] - 1.0) <= kPointTol * (1.0 + std::abs(ls[i] * ls[j])) &&
          !near(ls[i], ls[j]))
        throw ValidationError("preimage spec: reciprocal pair");
    }
  }
  // Conjugate closure of the eta multiset.
  std::vector<Complex> etas;
  etas.reserve(ls.size());
  for (const Complex& l : ls) etas.push_back(eta_of(l));
  std::vector<bool> used(etas.size(), false);
  for (size_t i = 0; i < etas.size(); ++i) {
    if (used[i] || std::abs(etas[i].imag()) <= kPointTol * (1.0 + std::abs(etas[i]))) continue;
    bool matched = false;
    for (size_t j = 0; j < etas.size(); ++j) {
      if (j == i || used[j]) continue;
      if (near(etas[j], std::conj(etas[i]))) {
        used[i] = used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) throw ValidationError("preimage spec: conjugate-closure failure in {eta(lambda)}");
  }
}

PreimageSpec canonicalized(const PreimageSpec& spec) {
  PreimageSpec out = spec;
  for (Complex& l : out.lambdas) l = canonical_lambda(l);
  std::sort(out.lambdas.begin(), out.lambdas.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

RationalFilter build_from_allpass(const AllPass& a) {
  // A(z) = (1+z)^{2m} sum_j b_j (1-z)^{2j} (1+z)^{2(r-j)}
  int r = a.r();
  RealPoly inner;
  for (int j = 0; j <= r; ++j) {
    RealPoly term = RealPoly::binomial_power(1.0, -1.0, 2 * j) *
                    RealPoly::binomial_power(1.0, 1.0, 2 * (r - j));
    inner = inner + a.b()[j] * term;
  }
  RealPoly big_a = symmetrized(RealPoly::binomial_power(1.0, 1.0, 2 * a.m()) * inner);
  double sigma = a.sign_at_i() * parity_sign(a.m() + r);
  return filter_from_palindromic(big_a, sigma);
}

RationalFilter build_from_preimages(const PreimageSpec& spec) {
  validate_spec(spec);
  std::vector<Complex> etas;
  etas.reserve(spec.lambdas.size());
  for (const Complex& l : spec.lambdas) etas.push_back(eta_of(l));
  RealPoly big_a = palindromic_from_etas(spec.m, etas);
  int r = static_cast<int>(spec.lambdas.size());
  double sigma = spec.sign_at_i * parity_sign(spec.m + r);
  return filter_from_palindromic(big_a, sigma);
}

PreimageSpec extract_preimage_spec(const RationalFilter& h) {
  auto [d_squares, d_inverse] = symmetry_residuals(h);
  if (d_squares > 1e-9)
    throw SymmetryError("symmetry violation: H(z)^2 + H(-z)^2 = 1 fails");
  if (d_inverse > 1e-9)
    throw SymmetryError("symmetry violation: H(z) = H(1/z) fails");
  if (std::abs(h.eval(1.0) - 1.0) > 1e-9)
    throw ValidationError("filter not normalized: H(1) != 1");

  Complex at_i = h.eval(Complex(0, 1));
  int sign = at_i.real() >= 0.0 ? 1 : -1;

  // Every zero of H is the negative of a preimage of 1 or of -1; the value
  // of H at the mirrored point tells the two sets apart.
  int two_m = multiplicity_at(h.num(), Complex(-1.0, 0.0));
  if (two_m < 2 || two_m % 2 != 0)
    throw SymmetryError("symmetry violation: zero multiplicity at -1 is not even positive");
  PreimageSpec spec;
  spec.m = two_m / 2;
  spec.sign_at_i = sign;

  RealPoly rest = deflate_real_root(h.num(), -1.0, two_m);
  if (rest.degree() >= 1) {
    std::vector<Complex> cands;
    for (Complex root : poly_roots(rest).expanded()) {
      // The deflated quotient carries the division noise; the roots are
      // simple roots of the numerator itself, so polish there.
      root = refine_root(h.num(), root);
      Complex value = h.eval(-root);
      if (std::abs(value - 1.0) < 1e-6) {
        cands.push_back(canonical_lambda(-root));
      } else if (std::abs(value + 1.0) > 1e-6) {
        throw SymmetryError("symmetry violation: a mirrored zero maps to neither 1 nor -1");
      }
    }
    // lambda and 1/lambda both appear among the mirrored zeros.
    std::vector<bool> used(cands.size(), false);
    for (size_t i = 0; i < cands.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      Complex sum = cands[i];
      int count = 1;
      for (size_t j = i + 1; j < cands.size(); ++j) {
        if (!used[j] && near(cands[j], cands[i], 1e-6)) {
          used[j] = true;
          sum += cands[j];
          ++count;
        }
      }
      for (int k = 0; k < count / 2; ++k)
        spec.lambdas.push_back(sum / static_cast<double>(count));
    }
  }
  return canonicalized(spec);
}

AllPass extract_allpass(const RationalFilter& h) {
  PreimageSpec spec = extract_preimage_spec(h);
  int r = static_cast<int>(spec.lambdas.size());
  if (r == 0) return AllPass(spec.sign_at_i, spec.m, RealPoly::one());

  // Recover B by a weighted least-squares fit of
  //   sigma B(z^2) = a(z) z^{2m} rev(B)(z^2),  b_0 = 1,
  // with a sampled pointwise through the inversion formula
  //   a = ((1 + H - H(-.))/(sqrt2 H(-.))) o beta.
  // The fit stays linear in the coefficients, so no root conditioning
  // enters the reconstruction.
  double sigma = spec.sign_at_i * parity_sign(spec.m + r);
  const int points = 8 * r + 16;
  Eigen::MatrixXd mat(2 * points, r);
  Eigen::VectorXd rhs(2 * points);
  for (int i = 0; i < points; ++i) {
    Complex z = std::polar(0.85, 2.0 * kPi * (i + 0.37) / points);
    Complex w = bilinear(z);
    Complex hw = h.eval(w);
    Complex hmw = h.eval(-w);
    Complex a = (1.0 + hw - hmw) / (kSqrt2 * hmw);
    double weight = 1.0 / (1.0 + std::norm(a));
    Complex v = z * z;
    Complex q = a * std::pow(z, 2 * spec.m);
    for (int j = 1; j <= r; ++j) {
      Complex coef = weight * (sigma * std::pow(v, j) - q * std::pow(v, r - j));
      mat(2 * i, j - 1) = coef.real();
      mat(2 * i + 1, j - 1) = coef.imag();
    }
    Complex free_term = weight * (q * std::pow(v, r) - sigma);
    rhs(2 * i) = free_term.real();
    rhs(2 * i + 1) = free_term.imag();
  }
  Eigen::VectorXd sol = mat.colPivHouseholderQr().solve(rhs);
  std::vector<double> b(static_cast<size_t>(r) + 1, 1.0);
  for (int j = 1; j <= r; ++j) b[static_cast<size_t>(j)] = sol(j - 1);
  return AllPass(spec.sign_at_i, spec.m, RealPoly(std::move(b)));
}

PreimageSpec stopband_spec(int m, int sign_at_i, const std::vector<double>& thetas,
                           const std::vector<Complex>& extra) {
  PreimageSpec spec;
  spec.m = m;
  spec.sign_at_i = sign_at_i;
  for (double theta : thetas) {
    if (!(theta > kPi / 2.0 && theta < kPi))
      throw ValidationError("stopband angle outside (pi/2, pi)");
    spec.lambdas.push_back(-std::polar(1.0, theta));
  }
  for (const Complex& l : extra) {
    if (l.real() <= 0.0)
      throw ValidationError("extra preimage not in the open right half plane");
    if (std::abs(std::abs(l) - 1.0) <= kPointTol)
      throw ValidationError("extra preimage on the unit circle");
    spec.lambdas.push_back(l);
  }
  validate_spec(spec);
  return spec;
}

RationalFilter design_stopband(int m, int sign_at_i, const std::vector<double>& thetas,
                               const std::vector<Complex>& extra) {
  return build_from_preimages(stopband_spec(m, sign_at_i, thetas, extra));
}

RationalFilter maxflat(MaxflatId id) {
  if (id.n < 1) throw ValidationError("maxflat: n must be >= 1");
  if (id.delta != 0 && id.delta != 1) throw ValidationError("maxflat: delta must be 0 or 1");
  double s = parity_sign(id.delta + id.n);
  RealPoly u = RealPoly::binomial_power(1.0, 1.0, 2 * id.n);
  RealPoly v = RealPoly::binomial_power(1.0, -1.0, 2 * id.n);
  RealPoly num = u * (u + (s * kSqrt2) * v);
  RealPoly den = u * u + v * v + (s * kSqrt2) * (u * v);
  return RationalFilter(symmetrized(num), symmetrized(den));
}

ComplexRootSet maxflat_zeros(MaxflatId id) {
  if (id.n < 1) throw ValidationError("maxflat: n must be >= 1");
  std::vector<RootMultiplicity> roots;
  roots.push_back({Complex(-1.0, 0.0), 2 * id.n});
  double radius = std::pow(2.0, -1.0 / (4.0 * id.n));
  for (int j = -id.n + 1; j <= id.n; ++j) {
    double angle = kPi * (2 * j + id.n + id.delta - 1) / (2.0 * id.n);
    roots.push_back({bilinear(std::polar(radius, angle)), 1});
  }
  return ComplexRootSet(std::move(roots));
}

ComplexRootSet maxflat_poles(MaxflatId id) {
  if (id.n < 1) throw ValidationError("maxflat: n must be >= 1");
  std::vector<RootMultiplicity> roots;
  for (int j = -id.n + 1; j <= id.n; ++j) {
    double t = std::tan(kPi * (5 + 8 * j + 4 * id.delta + 4 * id.n) / (16.0 * id.n));
    roots.push_back({Complex(0.0, t), 1});
    roots.push_back({Complex(0.0, -t), 1});
  }
  return ComplexRootSet(std::move(roots));
}

double maxflat_response(MaxflatId id, double xi) {
  double cot = 1.0 / std::tan(0.5 * xi);
  double c = parity_sign(id.delta) * std::pow(cot, 2 * id.n);
  double q = 1.0 / kSqrt2 + c;
  return 1.0 - 1.0 / (0.5 + q * q);
}

RationalFilter highpass(const RationalFilter& h) {
  RealPoly rn = h.num().negated_argument().reciprocal();
  RealPoly rd = h.den().negated_argument().reciprocal();
  int dn = h.num().degree();
  int dd = h.den().degree();
  if (dd >= dn)
    return RationalFilter(-1.0 * (RealPoly::monomial(dd - dn + 1) * rn), rd);
  return RationalFilter(-1.0 * (RealPoly::monomial(1) * rn), RealPoly::monomial(dn - dd) * rd);
}

double transition_slope(const PreimageSpec& spec) {
  validate_spec(spec);
  Complex sum = 0.0;
  for (const Complex& l : spec.lambdas) sum += 1.0 / eta_of(l);
  if (std::abs(sum.imag()) > 1e-9 * (1.0 + std::abs(sum)))
    throw ValidationError("preimage spec: 1/eta sum has a residual imaginary part");
  return -(2.0 - kSqrt2 * spec.sign_at_i) * (spec.m + sum.real());
}

}  // namespace lpqmf
