#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lpqmf/analysis.hpp"
#include "lpqmf/cascade.hpp"
#include "lpqmf/design.hpp"
#include "lpqmf/errors.hpp"
#include "lpqmf/synthesis.hpp"
#include "support.hpp"

using lpqmf::Complex;
using lpqmf::FirCascade;
using lpqmf::RationalFilter;
using lpqmf::RealPoly;
using lpqmf::SampledGrid;
using support::kPi;

TEST_CASE("frequency response grid") {
  RationalFilter h = lpqmf::maxflat({3, 0});
  SampledGrid g = lpqmf::freq_response(h, 1024);
  REQUIRE(g.values.size() == 1024);
  CHECK(g.x0 == -kPi);
  CHECK(g.values[512] == doctest::Approx(1.0).epsilon(1e-12));  // xi = 0
  CHECK(std::abs(g.values[0]) < 1e-12);                         // xi = -pi, zero at -1
  // value 1/sqrt(2) at +-pi/2
  CHECK(g.values[256] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));
  CHECK(g.values[768] == doctest::Approx(1.0 / std::numbers::sqrt2).epsilon(1e-12));

  CHECK_THROWS_AS(lpqmf::freq_response(h, 1), lpqmf::ValidationError);
  RationalFilter haar(RealPoly({0.5, 0.5}), RealPoly::one());
  CHECK_THROWS_AS(lpqmf::freq_response(haar, 64), lpqmf::SymmetryError);
}

TEST_CASE("response values stay inside [-1, 1] for quadrature filters") {
  std::mt19937 rng(400);
  for (int trial = 0; trial < 8; ++trial) {
    RationalFilter h = lpqmf::build_from_preimages(support::random_spec(rng));
    REQUIRE(lpqmf::qmf_residual(h) <= 1e-10);
    SampledGrid g = lpqmf::freq_response(h, 512);
    for (double v : g.values) {
      CHECK(v <= 1.0 + 1e-9);
      CHECK(v >= -1.0 - 1e-9);
    }
  }
}

TEST_CASE("stopband supremum of the flat family decreases with the order") {
  // measured away from pi/2 by 0.1
  double prev = 1.0;
  for (int n : {2, 3, 8, 20}) {
    RationalFilter h = lpqmf::maxflat({n, 0});
    double sup = 0.0;
    for (int k = 0; k < 512; ++k) {
      double xi = kPi / 2.0 + 0.1 + (kPi / 2.0 - 0.1) * k / 512.0;
      sup = std::max(sup, std::abs(h.response(xi).real()));
    }
    CHECK(sup < prev);
    prev = sup;
  }
}

TEST_CASE("closed-form response is nonincreasing in n through the stopband") {
  for (int k = 1; k < 128; ++k) {
    double xi = kPi / 2.0 + (kPi / 2.0) * k / 128.5;
    double prev = 2.0;
    for (int n : {2, 3, 8, 20}) {
      double v = lpqmf::maxflat_response({n, 0}, xi);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("iterating the inverse joukowski map squeezes the passband to one") {
  for (int k = 0; k < 64; ++k) {
    double xi = (kPi / 2.0 - 0.1) * (k + 1) / 65.0;
    Complex z = std::polar(1.0, xi);
    int it = 0;
    for (; it < 60; ++it) {
      z = 1.0 / lpqmf::joukowski(z);
      if (std::abs(z - 1.0) < 1e-9) break;
    }
    CHECK(it < 60);
  }
}

TEST_CASE("scaling function: even, unit mass, partition of unity") {
  FirCascade f = lpqmf::fir_approximate(lpqmf::maxflat({3, 0}), 1e-8);
  const int levels = 8;
  SampledGrid phi = lpqmf::scaling_samples(f, levels);

  // even about 0
  const auto& v = phi.values;
  double dev = 0.0;
  for (size_t i = 0; 2 * i < v.size(); ++i)
    dev = std::max(dev, std::abs(v[i] - v[v.size() - 1 - i]));
  CHECK(dev <= 100.0 * f.epsilon);

  CHECK(lpqmf::moment_sum(phi, 0) == doctest::Approx(1.0).epsilon(1e-3));

  // sum_k phi(x - k) = 1 for x in [0, 1)
  long stride = 1L << levels;
  for (long i = 0; i < stride; ++i) {
    double total = 0.0;
    for (long base = i % stride; base < static_cast<long>(v.size()); base += stride)
      total += v[static_cast<size_t>(base)];
    CHECK(total == doctest::Approx(1.0).epsilon(1e-3));
  }

  CHECK_THROWS_AS(lpqmf::scaling_samples(f, 0), lpqmf::ValidationError);
}

TEST_CASE("wavelet: even about one half, vanishing moments") {
  FirCascade f = lpqmf::fir_approximate(lpqmf::maxflat({3, 0}), 1e-8);
  const int levels = 8;
  SampledGrid psi = lpqmf::wavelet_samples(f, levels);

  long center = std::lround((0.5 - psi.x0) / psi.dx);
  REQUIRE(center > 0);
  REQUIRE(static_cast<size_t>(center) < psi.values.size());
  long reach = std::min<long>(center, static_cast<long>(psi.values.size()) - 1 - center);
  double dev = 0.0;
  for (long t = 1; t <= reach; ++t)
    dev = std::max(dev, std::abs(psi.values[static_cast<size_t>(center + t)] -
                                 psi.values[static_cast<size_t>(center - t)]));
  CHECK(dev <= 100.0 * f.epsilon);

  CHECK(std::abs(lpqmf::moment_sum(psi, 0)) < 1e-3);
  for (int k = 1; k < 6; ++k) CHECK(std::abs(lpqmf::moment_sum(psi, k)) < 1e-2);
}

TEST_CASE("moment sums on simple grids") {
  SampledGrid ones{0.0, 1.0 / 64.0, std::vector<double>(64, 1.0)};
  CHECK(lpqmf::moment_sum(ones, 0) == doctest::Approx(1.0).epsilon(1e-12));

  // odd function sampled symmetrically cancels at k = 0
  SampledGrid odd{-1.0, 2.0 / 100.0, {}};
  for (int i = 0; i <= 100; ++i) odd.values.push_back(odd.x0 + odd.dx * i);
  CHECK(std::abs(lpqmf::moment_sum(odd, 0)) < odd.dx);

  CHECK_THROWS_AS(lpqmf::moment_sum(ones, -1), lpqmf::ValidationError);
}

TEST_CASE("cascade iteration rejects unnormalized coefficient sets") {
  FirCascade f;
  f.prefactor = RealPoly({0.7, 0.7});  // sums to 1.4
  f.epsilon = 1e-8;
  CHECK_THROWS_AS(lpqmf::scaling_samples(f, 4), lpqmf::ValidationError);
}
