#include "lpqmf/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lpqmf/errors.hpp"

namespace lpqmf {

namespace {

constexpr double kPi = std::numbers::pi;

// Flattened coefficients recentered so that index k multiplies z^k with
// support [-c, c]; requires an integer linear-phase delay.
std::vector<double> centered_taps(const FirCascade& f, int* half_support, double* tolerance) {
  LaurentPoly flat = flatten(f);
  double sum = 0.0;
  for (double v : flat.coeffs()) sum += v;
  double tol = std::max(5.0 * f.epsilon, 1e-12);
  if (std::abs(sum - 1.0) > tol)
    throw ValidationError("cascade iteration: flattened coefficients do not sum to 1");
  if ((flat.low() + flat.high()) % 2 != 0)
    throw ValidationError("cascade iteration: no integer linear-phase delay");
  int c = (flat.high() - flat.low()) / 2;
  *half_support = c;
  if (tolerance) *tolerance = tol;
  std::vector<double> taps(static_cast<size_t>(2 * c) + 1, 0.0);
  for (int k = flat.low(); k <= flat.high(); ++k)
    taps[static_cast<size_t>(k - flat.low())] = flat.coefficient(k);
  return taps;  // taps[j] multiplies z^(j - c)
}

}  // namespace

SampledGrid freq_response(const RationalFilter& h, int points) {
  if (points < 2) throw ValidationError("freq_response: points must be >= 2");
  SampledGrid g;
  g.x0 = -kPi;
  g.dx = 2.0 * kPi / points;
  g.values.reserve(static_cast<size_t>(points));
  double den_scale = h.den().norm_one();
  for (int i = 0; i < points; ++i) {
    double xi = g.x_at(i);
    Complex z = std::polar(1.0, -xi);
    if (std::abs(h.den().eval(z)) <= 1e-12 * den_scale)
      throw RealizabilityError("freq_response: pole on a sampled circle point");
    Complex v = h.eval(z);
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v)))
      throw SymmetryError("freq_response: response has an imaginary part (filter not symmetric)");
    g.values.push_back(v.real());
  }
  return g;
}

SampledGrid scaling_samples(const FirCascade& f, int levels) {
  if (levels < 1) throw ValidationError("scaling samples: levels must be >= 1");
  int c = 0;
  std::vector<double> taps = centered_taps(f, &c, nullptr);

  // v holds samples at positions (i - offset) * 2^-j.
  std::vector<double> v{1.0};
  long offset = 0;
  for (int j = 0; j < levels; ++j) {
    long stride = 1L << j;
    long new_offset = offset + static_cast<long>(c) * stride;
    long size = 2 * new_offset + 1;
    std::vector<double> next(static_cast<size_t>(size), 0.0);
    for (long i = 0; i < size; ++i) {
      long pos = i - new_offset;  // fine-grid index
      double acc = 0.0;
      for (int k = -c; k <= c; ++k) {
        long src = pos - static_cast<long>(k) * stride + offset;
        if (src < 0 || src >= static_cast<long>(v.size())) continue;
        acc += taps[static_cast<size_t>(k + c)] * v[static_cast<size_t>(src)];
      }
      next[static_cast<size_t>(i)] = 2.0 * acc;
    }
    v = std::move(next);
    offset = new_offset;
  }

  SampledGrid g;
  g.dx = std::exp2(-levels);
  g.x0 = -static_cast<double>(offset) * g.dx;
  g.values = std::move(v);
  return g;
}

SampledGrid wavelet_samples(const FirCascade& f, int levels) {
  if (levels < 1) throw ValidationError("wavelet samples: levels must be >= 1");
  int c = 0;
  std::vector<double> taps = centered_taps(f, &c, nullptr);
  SampledGrid phi = scaling_samples(f, levels);
  long phi_offset = static_cast<long>(std::llround(-phi.x0 / phi.dx));

  // g_k = (-1)^k h_{1-k}, support [1-c, 1+c].
  auto g_tap = [&](int k) {
    int idx = (1 - k) + c;
    if (idx < 0 || idx > 2 * c) return 0.0;
    double hv = taps[static_cast<size_t>(idx)];
    return (k % 2 == 0) ? hv : -hv;
  };

  long stride = 1L << levels;
  long lphi = static_cast<long>(phi.values.size());
  // psi(i 2^-L) = 2 sum_k g_k phi((2i - k 2^L) 2^-L)
  long imin = ((1 - static_cast<long>(c)) * stride - phi_offset) / 2 - 1;
  long imax = ((1 + static_cast<long>(c)) * stride + phi_offset) / 2 + 1;
  std::vector<double> out;
  out.reserve(static_cast<size_t>(imax - imin + 1));
  for (long i = imin; i <= imax; ++i) {
    double acc = 0.0;
    for (int k = 1 - c; k <= 1 + c; ++k) {
      long src = 2 * i - static_cast<long>(k) * stride + phi_offset;
      if (src < 0 || src >= lphi) continue;
      acc += g_tap(k) * phi.values[static_cast<size_t>(src)];
    }
    out.push_back(2.0 * acc);
  }

  SampledGrid g;
  g.dx = phi.dx;
  g.x0 = static_cast<double>(imin) * g.dx;
  g.values = std::move(out);
  return g;
}

double moment_sum(const SampledGrid& g, int k) {
  if (k < 0) throw ValidationError("moment_sum: k must be >= 0");
  double acc = 0.0;
  for (size_t i = 0; i < g.values.size(); ++i)
    acc += std::pow(g.x_at(static_cast<int>(i)), k) * g.values[i];
  return acc * g.dx;
}

}  // namespace lpqmf
