#include "lpqmf/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpqmf/errors.hpp"
#include "lpqmf/roots.hpp"

namespace lpqmf {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> conv(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> r(a.size() + b.size() - 1, Complex(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

RealPoly realified(const std::vector<Complex>& c) {
  double scale = 0.0;
  for (const Complex& v : c) scale = std::max(scale, std::abs(v));
  std::vector<double> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i].imag()) > 1e-9 * std::max(1.0, scale))
      throw ValidationError("cascade factor: residual imaginary part after conjugate pairing");
    r[i] = c[i].real();
  }
  // The outermost factor coefficients can be tiny relative to the middle and
  // still set the degree; keep them literally.
  return RealPoly::raw(std::move(r));
}

RealPoly scaled_raw(double s, const RealPoly& p) {
  std::vector<double> c = p.coeffs();
  for (double& v : c) v *= s;
  return RealPoly::raw(std::move(c));
}

struct PairPlan {
  Complex q;
  int drop_level;  // factors are emitted for levels k < drop_level
};

}  // namespace

int FirCascade::top_level() const {
  int top = 0;
  for (const auto& f : factors) top = std::max(top, f.level);
  return top;
}

int FirCascade::product_degree() const {
  int d = prefactor.degree();
  for (const auto& f : factors) d += (1 << f.level) * f.f.degree();
  return d;
}

int FirCascade::delay() const { return product_degree() / 2 - shift_n; }

Complex FirCascade::eval(Complex z) const {
  Complex acc = prefactor.eval(z);
  for (const auto& f : factors) acc *= f.f.eval(std::pow(z, 1 << f.level));
  if (shift_n != 0) acc *= std::pow(z, -shift_n);
  return acc;
}

FirCascade fir_approximate(const RationalFilter& h, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("fir approximation: epsilon must be positive");
  const RealPoly& num = h.num();
  const RealPoly& den = h.den();

  FirCascade out;
  out.epsilon = epsilon;
  if (den.is_constant()) {
    out.prefactor = (1.0 / den[0]) * num;
    out.achieved = 0.0;
    return out;
  }
  if (epsilon >= 1.0 / (2.0 * den.degree()))
    throw ValidationError("fir approximation: epsilon must be below 1/(2 deg Q)");
  for (int k = 1; k <= den.degree(); k += 2)
    if (std::abs(den[k]) > 1e-12 * den.norm_inf())
      throw ValidationError("fir approximation: denominator is not an even function");

  // Q(z) = C(z^2); reciprocal root pairs (q, 1/q) of C drive the factors.
  std::vector<double> cc(static_cast<size_t>(den.degree() / 2) + 1);
  for (size_t j = 0; j < cc.size(); ++j) cc[j] = den[static_cast<int>(2 * j)];
  RealPoly c_poly(std::move(cc));
  std::vector<Complex> qs;
  for (const Complex& w : poly_roots(c_poly).expanded()) {
    if (std::abs(std::abs(w) - 1.0) <= 1e-6)
      throw RealizabilityError("fir approximation: pole on the unit circle");
    if (std::abs(w) < 1.0) qs.push_back(w);
  }
  if (static_cast<int>(qs.size()) * 2 != c_poly.degree())
    throw RealizabilityError("fir approximation: denominator roots do not pair into reciprocals");

  const int pair_count = static_cast<int>(qs.size());
  const double drop_threshold = epsilon / (4.0 * pair_count);
  std::vector<PairPlan> plan;
  for (const Complex& q : qs) {
    int k = 0;
    double mag = std::abs(q);
    while (mag > drop_threshold && k < 64) {
      mag *= mag;
      ++k;
    }
    plan.push_back({q, k});
  }

  // Smallest K with sum |q|^(2^(K+1)) <= epsilon/2.
  int top_k = 0;
  for (; top_k < 64; ++top_k) {
    double sum = 0.0;
    for (const auto& p : plan) sum += std::pow(std::abs(p.q), std::exp2(top_k + 1));
    if (sum <= 0.5 * epsilon) break;
  }

  const double scale_p = std::exp2(-num.degree());
  for (int attempt = 0; attempt < 10; ++attempt, ++top_k) {
    std::vector<std::vector<Complex>> g(static_cast<size_t>(top_k) + 1);
    for (int k = 0; k <= top_k; ++k) {
      std::vector<Complex> acc{Complex(1.0)};
      bool any = false;
      for (const auto& p : plan) {
        if (k >= p.drop_level) continue;
        Complex qk = p.q;
        for (int i = 0; i < k; ++i) qk *= qk;
        acc = conv(acc, {qk, 1.0 + qk * qk, qk});
        any = true;
      }
      if (any) g[static_cast<size_t>(k)] = std::move(acc);
    }

    Complex scalar = 1.0 / c_poly.leading();
    for (const auto& p : plan) scalar *= -p.q;
    double fold = scalar.real() / scale_p;
    if (std::abs(scalar.imag()) > 1e-9 * std::abs(scalar))
      throw ValidationError("fir approximation: residual imaginary part in the pole product");

    out.factors.clear();
    out.prefactor = scale_p * num;
    out.shift_n = 0;
    std::vector<RealPoly> gs(g.size());
    for (size_t k = 0; k < g.size(); ++k)
      gs[k] = g[k].empty() ? RealPoly::one() : realified(g[k]);
    for (size_t k = 1; k < gs.size(); ++k) fold *= gs[k].eval(1.0);
    // All scalar constants fold into the first-level factor; deeper factors
    // are normalized to value 1 at z = 1.
    out.factors.push_back({1, scaled_raw(fold, gs[0])});
    for (size_t k = 1; k < gs.size(); ++k) {
      if (g[k].empty()) continue;
      out.factors.push_back({static_cast<int>(k) + 1, scaled_raw(1.0 / gs[k].eval(1.0), gs[k])});
    }

    // Relative error on the circle, computed from the algebraically cancelled
    // quotient F / (z^delay H) = scale_p * den * prod F_k * z^(-delay); exact
    // even at the zeros of H.
    const int grid = 8192;
    const int c_delay = out.delay();
    double worst = 0.0;
    for (int i = 0; i < grid; ++i) {
      double xi = -kPi + 2.0 * kPi * i / grid;
      Complex z = std::polar(1.0, xi);
      Complex r = scale_p * den.eval(z);
      for (const auto& f : out.factors) r *= f.f.eval(std::polar(1.0, xi * std::exp2(f.level)));
      r *= std::polar(1.0, -xi * c_delay);
      worst = std::max(worst, std::abs(r - 1.0));
    }
    out.achieved = worst;
    if (out.achieved <= epsilon) return out;
  }
  throw RealizabilityError("fir approximation: accuracy target not reached");
}

LaurentPoly flatten(const FirCascade& f) {
  // Literal expanded product: raw convolutions keep the tiny outermost
  // coefficients that the canonicalizing polynomial type would strip.
  std::vector<double> prod = f.prefactor.coeffs();
  for (const auto& factor : f.factors) {
    const auto& fc = factor.f.coeffs();
    const size_t stride = static_cast<size_t>(1) << factor.level;
    std::vector<double> next(prod.size() + (fc.size() - 1) * stride, 0.0);
    for (size_t j = 0; j < fc.size(); ++j)
      for (size_t i = 0; i < prod.size(); ++i) next[i + j * stride] += prod[i] * fc[j];
    prod = std::move(next);
  }
  return LaurentPoly::raw(-f.shift_n, std::move(prod));
}

double qmf_defect(const FirCascade& f, int grid) {
  if (grid < 16) throw ValidationError("qmf_defect: grid must be >= 16");
  double worst = 0.0;
  for (int i = 0; i < grid; ++i) {
    double xi = -kPi + 2.0 * kPi * i / grid;
    Complex z = std::polar(1.0, xi);
    Complex v = f.eval(z) * f.eval(1.0 / z) + f.eval(-z) * f.eval(-1.0 / z);
    worst = std::max(worst, std::abs(v - 1.0));
  }
  return worst;
}

double filterbank_roundtrip(const FirCascade& f, const Signal& x) {
  const int n = static_cast<int>(x.samples.size());
  if (n < 4) throw ValidationError("filter bank: signal length must be >= 4");
  if (n % 2 != 0) throw ValidationError("filter bank: signal length must be even");

  LaurentPoly flat = flatten(f);
  const auto& fc = flat.coeffs();
  const int lo = flat.low();
  // High-pass companion by modulation of the flattened coefficients,
  // G(z) = -z F(-1/z):  g_k = (-1)^k f_(1-k).
  const int glo = 1 - flat.high();
  std::vector<double> gc(fc.size());
  for (size_t i = 0; i < gc.size(); ++i) {
    int k = glo + static_cast<int>(i);
    double fv = flat.coefficient(1 - k);
    gc[i] = (k % 2 == 0) ? fv : -fv;
  }

  auto wrap = [n](int i) { return ((i % n) + n) % n; };
  // Analysis by correlation, synthesis by convolution; the pair is
  // delay-free for any linear-phase placement of the coefficients.
  std::vector<double> low(static_cast<size_t>(n), 0.0), high(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double al = 0.0, ah = 0.0;
    for (size_t j = 0; j < fc.size(); ++j)
      al += fc[j] * x.samples[static_cast<size_t>(wrap(i + lo + static_cast<int>(j)))];
    for (size_t j = 0; j < gc.size(); ++j)
      ah += gc[j] * x.samples[static_cast<size_t>(wrap(i + glo + static_cast<int>(j)))];
    low[static_cast<size_t>(i)] = al;
    high[static_cast<size_t>(i)] = ah;
  }
  for (int i = 1; i < n; i += 2) {
    low[static_cast<size_t>(i)] = 0.0;  // 2-fold decimation, kept on the even grid
    high[static_cast<size_t>(i)] = 0.0;
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double y = 0.0;
    for (size_t j = 0; j < fc.size(); ++j)
      y += 2.0 * fc[j] * low[static_cast<size_t>(wrap(i - lo - static_cast<int>(j)))];
    for (size_t j = 0; j < gc.size(); ++j)
      y += 2.0 * gc[j] * high[static_cast<size_t>(wrap(i - glo - static_cast<int>(j)))];
    worst = std::max(worst, std::abs(y - x.samples[static_cast<size_t>(i)]));
  }
  return worst;
}

}  // namespace lpqmf
