#include "lpqmf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "lpqmf/errors.hpp"

namespace lpqmf {

namespace {

constexpr double kEndStripRel = 1e-13;

std::vector<double> strip_top(std::vector<double> c) {
  double norm = 0.0;
  for (double v : c) norm = std::max(norm, std::abs(v));
  if (norm == 0.0) return {0.0};
  while (c.size() > 1 && std::abs(c.back()) <= kEndStripRel * norm) c.pop_back();
  return c;
}

}  // namespace

RealPoly::RealPoly(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  coeffs_ = strip_top(std::move(coeffs));
}

RealPoly RealPoly::raw(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  RealPoly out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

RealPoly RealPoly::monomial(int degree, double c) {
  std::vector<double> v(static_cast<size_t>(degree) + 1, 0.0);
  v.back() = c;
  return RealPoly(std::move(v));
}

RealPoly RealPoly::binomial_power(double a, double b, int n) {
  std::vector<double> v{1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> w(v.size() + 1, 0.0);
    for (size_t k = 0; k < v.size(); ++k) {
      w[k] += a * v[k];
      w[k + 1] += b * v[k];
    }
    v = std::move(w);
  }
  return RealPoly(std::move(v));
}

double RealPoly::operator[](int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(k)];
}

double RealPoly::norm_inf() const {
  double m = 0.0;
  for (double v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

double RealPoly::norm_one() const {
  double s = 0.0;
  for (double v : coeffs_) s += std::abs(v);
  return s;
}

Complex RealPoly::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double RealPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (coeffs_.size() == 1) return RealPoly();
  std::vector<double> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return RealPoly(std::move(d));
}

RealPoly RealPoly::reciprocal() const {
  std::vector<double> r(coeffs_.rbegin(), coeffs_.rend());
  return RealPoly(std::move(r));
}

RealPoly RealPoly::negated_argument() const {
  std::vector<double> r = coeffs_;
  for (size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return RealPoly(std::move(r));
}

RealPoly RealPoly::dilated(int k) const {
  std::vector<double> r(static_cast<size_t>(degree()) * k + 1, 0.0);
  for (size_t j = 0; j < coeffs_.size(); ++j) r[j * k] = coeffs_[j];
  return RealPoly(std::move(r));
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  std::vector<double> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) r[k] += b.coeffs_[k];
  return RealPoly(std::move(r));
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) {
  std::vector<double> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (size_t k = 0; k < a.coeffs_.size(); ++k) r[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) r[k] -= b.coeffs_[k];
  return RealPoly(std::move(r));
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() || b.is_zero()) return RealPoly();
  std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RealPoly(std::move(r));
}

RealPoly operator*(double s, const RealPoly& p) {
  std::vector<double> r = p.coeffs_;
  for (double& v : r) v *= s;
  return RealPoly(std::move(r));
}

LaurentPoly::LaurentPoly(int low, std::vector<double> coeffs) : low_(low) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  double norm = 0.0;
  for (double v : coeffs) norm = std::max(norm, std::abs(v));
  if (norm == 0.0) {
    low_ = 0;
    coeffs_ = {0.0};
    return;
  }
  size_t first = 0;
  while (first + 1 < coeffs.size() && std::abs(coeffs[first]) <= kEndStripRel * norm) ++first;
  size_t last = coeffs.size();
  while (last > first + 1 && std::abs(coeffs[last - 1]) <= kEndStripRel * norm) --last;
  low_ += static_cast<int>(first);
  coeffs_.assign(coeffs.begin() + static_cast<long>(first), coeffs.begin() + static_cast<long>(last));
}

LaurentPoly LaurentPoly::raw(int low, std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  size_t first = 0;
  while (first + 1 < coeffs.size() && coeffs[first] == 0.0) ++first;
  size_t last = coeffs.size();
  while (last > first + 1 && coeffs[last - 1] == 0.0) --last;
  LaurentPoly out;
  out.low_ = low + static_cast<int>(first);
  out.coeffs_.assign(coeffs.begin() + static_cast<long>(first),
                     coeffs.begin() + static_cast<long>(last));
  if (out.coeffs_.size() == 1 && out.coeffs_[0] == 0.0) out.low_ = 0;
  return out;
}

double LaurentPoly::norm_inf() const {
  double m = 0.0;
  for (double v : coeffs_) m = std::max(m, std::abs(v));
  return m;
}

double LaurentPoly::coefficient(int k) const {
  int j = k - low_;
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<size_t>(j)];
}

Complex LaurentPoly::eval(Complex z) const {
  if (low_ < 0 && z == Complex(0.0, 0.0))
    throw PoleError("laurent evaluation: pole at z = 0 (negative exponents present)");
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc * std::pow(z, Complex(low_));
}

double LaurentPoly::eval(double x) const {
  Complex v = eval(Complex(x, 0.0));
  return v.real();
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.low_ + b.low_, std::move(r));
}

std::pair<RealPoly, RealPoly> divrem(const RealPoly& a, const RealPoly& b) {
  if (b.is_zero()) throw ValidationError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RealPoly(), a};
  std::vector<double> rem = a.coeffs();
  std::vector<double> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0.0);
  const auto& bc = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    double q = rem[static_cast<size_t>(k + b.degree())] / bc.back();
    quot[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<size_t>(k + j)] -= q * bc[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(std::max(b.degree(), 1)));
  return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

RealPoly poly_gcd(const RealPoly& a, const RealPoly& b, double tol) {
  if (a.is_zero() && b.is_zero()) throw ValidationError("poly_gcd: both inputs are zero");
  auto normalized = [](const RealPoly& p) {
    double n = p.norm_inf();
    return n > 0.0 ? (1.0 / n) * p : p;
  };
  RealPoly f = a.is_zero() ? b : a;
  RealPoly g = a.is_zero() ? RealPoly() : b;
  f = normalized(f);
  g = normalized(g);
  if (f.degree() < g.degree()) std::swap(f, g);
  // Normalized Euclidean sequence; a remainder below tol (inputs are rescaled
  // to unit norm every round) is treated as an exact common-factor hit.
  while (!g.is_zero()) {
    RealPoly r = divrem(f, g).second;
    f = std::move(g);
    g = (r.norm_inf() <= tol) ? RealPoly() : normalized(r);
  }
  if (f.is_constant()) return RealPoly::one();
  return (1.0 / f.leading()) * f;
}

bool is_palindromic(const RealPoly& p, double tol) {
  double scale = std::max(1.0, p.norm_inf());
  int d = p.degree();
  for (int k = 0; 2 * k <= d; ++k)
    if (std::abs(p[k] - p[d - k]) > tol * scale) return false;
  return true;
}

std::vector<Complex> taylor_at(const RealPoly& p, Complex z0) {
  // Repeated synthetic division in place; after round i, c[i] holds the
  // coefficient of (z - z0)^i.
  std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
  size_t n = c.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = n - 1; j-- > i;) c[j] += z0 * c[j + 1];
  return c;
}

RealPoly deflate_real_root(const RealPoly& p, double x0, int k) {
  std::vector<double> c = p.coeffs();
  for (int round = 0; round < k; ++round) {
    if (c.size() <= 1) return RealPoly();
    std::vector<double> q(c.size() - 1, 0.0);
    double carry = 0.0;
    for (size_t j = c.size(); j-- > 1;) {
      carry = c[j] + carry * x0;
      q[j - 1] = carry;
    }
    c = std::move(q);
  }
  return RealPoly(std::move(c));
}

}  // namespace lpqmf
