#include "lpqmf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpqmf/errors.hpp"
#include "lpqmf/roots.hpp"

namespace lpqmf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> circle_zero_angles(const RationalFilter& h) {
  std::vector<double> angles;
  if (h.num().degree() < 1) return angles;
  ComplexRootSet zeros = poly_roots(h.num());
  for (const auto& r : zeros.roots()) {
    if (std::abs(std::abs(r.value) - 1.0) <= 1e-6)
      angles.push_back(std::arg(r.value));
  }
  return angles;
}

}  // namespace

double qmf_residual(const RationalFilter& h, int grid) {
  if (grid < 16) throw ValidationError("qmf_residual: grid must be >= 16");
  double worst = 0.0;
  double den_scale = h.den().norm_one();
  for (int k = 0; k < grid; ++k) {
    double xi = -kPi + kTwoPi * k / grid;
    Complex z = std::polar(1.0, xi);
    if (std::abs(h.den().eval(z)) <= 1e-12 * den_scale ||
        std::abs(h.den().eval(-z)) <= 1e-12 * den_scale)
      throw RealizabilityError("qmf_residual: pole on the evaluation grid");
    Complex v = h.eval(z) * h.eval(1.0 / z) + h.eval(-z) * h.eval(-1.0 / z);
    worst = std::max(worst, std::abs(v - 1.0));
  }
  return worst;
}

double check_sym(const RationalFilter& h) {
  auto [d_squares, d_inverse] = symmetry_residuals(h);
  return std::max(d_squares, d_inverse);
}

std::pair<int, int> vanishing_moments(const RationalFilter& h) {
  if (std::abs(h.eval(1.0) - 1.0) > 1e-9)
    throw ValidationError("vanishing_moments: filter not normalized at z = 1");
  int m = multiplicity_at(h.num(), Complex(-1.0, 0.0));
  RealPoly one_minus = h.den() - h.num();
  int n = one_minus.is_zero() ? 0 : multiplicity_at(one_minus, Complex(1.0, 0.0));
  return {m, n};
}

CohenResult cohen_check(const RationalFilter& h, int max_cycle) {
  if (max_cycle < 2) throw ValidationError("cohen_check: max_cycle must be >= 2");
  const double angle_tol = 1e-7;

  // Angles omega with m0(omega + pi) = 0, i.e. the unit-circle zero angles
  // shifted by pi, folded into [0, 2 pi).
  std::vector<double> nodes;
  for (double zeta : circle_zero_angles(h)) {
    double omega = std::fmod(zeta + kPi, kTwoPi);
    if (omega < 0) omega += kTwoPi;
    bool fresh = true;
    for (double w : nodes)
      if (std::abs(w - omega) <= angle_tol || std::abs(std::abs(w - omega) - kTwoPi) <= angle_tol)
        fresh = false;
    if (fresh) nodes.push_back(omega);
  }
  std::sort(nodes.begin(), nodes.end());

  auto find_node = [&](double omega) -> int {
    for (size_t i = 0; i < nodes.size(); ++i) {
      double d = std::abs(nodes[i] - omega);
      d = std::min(d, kTwoPi - d);
      if (d <= angle_tol) return static_cast<int>(i);
    }
    return -1;
  };

  for (size_t start = 0; start < nodes.size(); ++start) {
    if (nodes[start] <= angle_tol || kTwoPi - nodes[start] <= angle_tol) continue;  // omega = 0 is trivial
    std::vector<double> orbit{nodes[start]};
    double omega = nodes[start];
    for (int step = 0; step < max_cycle; ++step) {
      omega = std::fmod(2.0 * omega, kTwoPi);
      int idx = find_node(omega);
      if (idx < 0) break;
      if (static_cast<size_t>(idx) == start) return {false, orbit};
      omega = nodes[static_cast<size_t>(idx)];
      orbit.push_back(omega);
    }
  }
  return {true, {}};
}

double positivity_check(const RationalFilter& h, int grid) {
  // Factored evaluation keeps the relative accuracy uniform near the
  // high-order zeros at -1, where Horner on the expanded coefficients loses
  // the sign of the tiny response values.
  ComplexRootSet zeros = poly_roots(h.num());
  ComplexRootSet poles = h.den().is_constant() ? ComplexRootSet() : poly_roots(h.den());
  auto from_roots = [](const ComplexRootSet& rs, double lead, Complex z) {
    Complex acc = lead;
    for (const auto& r : rs.roots())
      for (int i = 0; i < r.multiplicity; ++i) acc *= z - r.value;
    return acc;
  };
  double lo = 0.0;
  bool first = true;
  for (int k = 0; k < grid; ++k) {
    double xi = -kPi + kTwoPi * (k + 0.5) / grid;
    Complex z = std::polar(1.0, -xi);
    Complex num = from_roots(zeros, h.num().leading(), z);
    Complex den = h.den().is_constant() ? Complex(h.den()[0]) : from_roots(poles, h.den().leading(), z);
    double v = (num / den).real();
    if (first || v < lo) {
      lo = v;
      first = false;
    }
  }
  return lo;
}

FilterGeometry geometry_report(const RationalFilter& h) {
  FilterGeometry geo;
  if (h.den().degree() >= 1) {
    ComplexRootSet poles = poly_roots(h.den());
    for (const auto& p : poles.roots())
      if (std::abs(p.value.real()) > 1e-8 * (1.0 + std::abs(p.value))) geo.poles_imaginary = false;
  }
  for (double zeta : circle_zero_angles(h)) {
    double angle = std::abs(zeta);
    if (angle > kPi / 2.0 && angle <= kPi) geo.stopband_zeros.push_back(angle);
  }
  std::sort(geo.stopband_zeros.begin(), geo.stopband_zeros.end());
  geo.stopband_zeros.erase(
      std::unique(geo.stopband_zeros.begin(), geo.stopband_zeros.end(),
                  [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
      geo.stopband_zeros.end());
  return geo;
}

FilterReport analyze(const RationalFilter& h, int grid, int max_cycle) {
  FilterReport rep;
  rep.qmf_residual = qmf_residual(h, grid);
  rep.sym_residual = check_sym(h);
  auto [m, n] = vanishing_moments(h);
  rep.wavelet_moments = m;
  rep.scaling_moments = n;
  rep.cohen = cohen_check(h, max_cycle);
  rep.min_response = positivity_check(h, grid);
  FilterGeometry geo = geometry_report(h);
  rep.poles_imaginary = geo.poles_imaginary;
  rep.stopband_zeros = geo.stopband_zeros;
  return rep;
}

}  // namespace lpqmf
