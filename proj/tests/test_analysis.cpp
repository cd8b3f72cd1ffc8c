#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lpqmf/analysis.hpp"
#include "lpqmf/design.hpp"
#include "lpqmf/errors.hpp"
#include "lpqmf/roots.hpp"
#include "support.hpp"

using lpqmf::Complex;
using lpqmf::PreimageSpec;
using lpqmf::RationalFilter;
using lpqmf::RealPoly;
using support::kPi;

TEST_CASE("qmf residual") {
  RationalFilter haar(RealPoly({0.5, 0.5}), RealPoly::one());
  CHECK(lpqmf::qmf_residual(haar, 256) < 1e-15);

  CHECK(lpqmf::qmf_residual(lpqmf::maxflat({3, 0})) < 1e-11);

  // H = (1+z^2)/2 misses the quadrature condition by sup |cos 2 xi| = 1
  RationalFilter bad(RealPoly({0.5, 0.0, 0.5}), RealPoly::one());
  CHECK(lpqmf::qmf_residual(bad, 512) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(lpqmf::qmf_residual(haar, 8), lpqmf::ValidationError);
}

TEST_CASE("every constructed filter satisfies the quadrature identity") {
  std::mt19937 rng(200);
  for (int trial = 0; trial < 10; ++trial) {
    RationalFilter h = lpqmf::build_from_preimages(support::random_spec(rng));
    CHECK(lpqmf::qmf_residual(h) < 1e-10);
  }
}

TEST_CASE("symmetry classification") {
  CHECK(lpqmf::check_sym(lpqmf::maxflat({2, 1})) < 1e-11);
  std::mt19937 rng(201);
  CHECK(lpqmf::check_sym(lpqmf::build_from_preimages(support::random_spec(rng))) < 1e-10);

  RationalFilter haar(RealPoly({0.5, 0.5}), RealPoly::one());
  double dev = lpqmf::check_sym(haar);
  CHECK(dev > 0.5);  // sup over the circle of |z - 1/z|/2 reaches 1
}

TEST_CASE("vanishing moments") {
  for (int n = 1; n <= 6; ++n)
    for (int delta : {0, 1}) {
      auto [m_w, m_s] = lpqmf::vanishing_moments(lpqmf::maxflat({n, delta}));
      CHECK(m_w == 2 * n);
      CHECK(m_s == 4 * n);
    }

  PreimageSpec table{1, 1, {std::polar(1.0, 0.21 * kPi), std::polar(1.0, 0.31 * kPi)}};
  auto [mw, ms] = lpqmf::vanishing_moments(lpqmf::build_from_preimages(table));
  CHECK(mw == 2);
  CHECK(ms == 4);

  RationalFilter haar(RealPoly({0.5, 0.5}), RealPoly::one());
  auto [hw, hs] = lpqmf::vanishing_moments(haar);
  CHECK(hw == 1);
  CHECK(hs == 1);

  RationalFilter unnormalized(RealPoly({1.0, 1.0}), RealPoly::one());
  CHECK_THROWS_AS(lpqmf::vanishing_moments(unnormalized), lpqmf::ValidationError);
}

TEST_CASE("cohen check finds the doubling cycle of the bad order-12 filter") {
  PreimageSpec bad{1, 1, {std::polar(1.0, 0.4 * kPi), std::polar(1.0, 0.8 * kPi)}};
  lpqmf::CohenResult res = lpqmf::cohen_check(lpqmf::build_from_preimages(bad));
  REQUIRE_FALSE(res.pass);
  REQUIRE(res.witness.size() == 4);
  std::vector<double> expected = {2.0 * kPi / 5.0, 4.0 * kPi / 5.0, 8.0 * kPi / 5.0, 6.0 * kPi / 5.0};
  for (size_t i = 0; i < 4; ++i) CHECK(res.witness[i] == doctest::Approx(expected[i]).epsilon(1e-7));

  for (int n = 1; n <= 6; ++n)
    for (int delta : {0, 1}) CHECK(lpqmf::cohen_check(lpqmf::maxflat({n, delta})).pass);

  CHECK_THROWS_AS(lpqmf::cohen_check(lpqmf::maxflat({1, 0}), 1), lpqmf::ValidationError);
}

TEST_CASE("positivity of the response") {
  for (int n = 1; n <= 8; ++n) CHECK(lpqmf::positivity_check(lpqmf::maxflat({n, 0})) > 0.0);
  for (int n = 1; n <= 4; ++n) CHECK(lpqmf::positivity_check(lpqmf::maxflat({n, 1})) < 0.0);

  // sign at i = -1 forces a negative value at pi/2
  PreimageSpec negative{1, -1, {}};
  CHECK(lpqmf::positivity_check(lpqmf::build_from_preimages(negative)) < 0.0);
}

TEST_CASE("geometry report") {
  PreimageSpec right{1, 1, {std::polar(1.0, 0.21 * kPi), std::polar(1.0, 0.31 * kPi)}};
  lpqmf::FilterGeometry geo = lpqmf::geometry_report(lpqmf::build_from_preimages(right));
  CHECK(geo.poles_imaginary);

  PreimageSpec mixed{1, 1, {std::polar(1.0, 0.4 * kPi), std::polar(1.0, 0.8 * kPi)}};
  CHECK_FALSE(lpqmf::geometry_report(lpqmf::build_from_preimages(mixed)).poles_imaginary);

  for (int n = 1; n <= 4; ++n)
    for (int delta : {0, 1})
      CHECK(lpqmf::geometry_report(lpqmf::maxflat({n, delta})).poles_imaginary);

  // stopband zero list of the stopband design
  RationalFilter h = lpqmf::design_stopband(1, 1, {0.6 * kPi, 0.8 * kPi}, {});
  lpqmf::FilterGeometry g2 = lpqmf::geometry_report(h);
  REQUIRE(g2.stopband_zeros.size() == 3);
  CHECK(g2.stopband_zeros[0] == doctest::Approx(0.6 * kPi).epsilon(1e-9));
  CHECK(g2.stopband_zeros[1] == doctest::Approx(0.8 * kPi).epsilon(1e-9));
  CHECK(g2.stopband_zeros[2] == doctest::Approx(kPi).epsilon(1e-9));
}

TEST_CASE("right-half-plane specs give imaginary poles and left-plane preimages of -1") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 15; ++trial) {
    PreimageSpec spec = support::random_spec(rng, /*right_half_plane=*/true);
    RationalFilter h = lpqmf::build_from_preimages(spec);
    for (const Complex& p : lpqmf::poly_roots(h.den()).expanded())
      CHECK(std::abs(p.real()) <= 1e-8 * (1.0 + std::abs(p)));
    // preimages of -1: roots of den + num
    RealPoly one_plus = h.den() + h.num();
    for (const Complex& w : lpqmf::poly_roots(one_plus).expanded()) CHECK(w.real() < 0.0);
  }
}

TEST_CASE("no pole on the unit circle or the real axis") {
  std::mt19937 rng(203);
  for (int trial = 0; trial < 10; ++trial) {
    RationalFilter h = lpqmf::build_from_preimages(support::random_spec(rng));
    for (const Complex& p : lpqmf::poly_roots(h.den()).expanded()) {
      CHECK(std::abs(std::abs(p) - 1.0) > 1e-6);
      CHECK(std::abs(p.imag()) > 1e-6);
    }
  }
}

TEST_CASE("zero-at-minus-one chain: numerator, 1-H, all-pass pole order") {
  std::mt19937 rng(204);
  for (int trial = 0; trial < 10; ++trial) {
    PreimageSpec spec = support::random_spec(rng);
    RationalFilter h = lpqmf::build_from_preimages(spec);
    int two_m = lpqmf::multiplicity_at(h.num(), Complex(-1.0, 0.0));
    int four_m = lpqmf::multiplicity_at(h.den() - h.num(), Complex(1.0, 0.0));
    lpqmf::AllPass a = lpqmf::extract_allpass(h);
    CHECK(two_m == 2 * spec.m);
    CHECK(four_m == 4 * spec.m);
    CHECK(2 * a.m() == two_m);
  }
}

TEST_CASE("combined report") {
  lpqmf::FilterReport rep = lpqmf::analyze(lpqmf::maxflat({3, 0}));
  CHECK(rep.qmf_residual < 1e-10);
  CHECK(rep.sym_residual < 1e-10);
  CHECK(rep.wavelet_moments == 6);
  CHECK(rep.scaling_moments == 12);
  CHECK(rep.cohen.pass);
  CHECK(rep.cohen.witness.empty());
  CHECK(rep.min_response > 0.0);
  CHECK(rep.poles_imaginary);
  CHECK(rep.passes());

  PreimageSpec bad{1, 1, {std::polar(1.0, 0.4 * kPi), std::polar(1.0, 0.8 * kPi)}};
  lpqmf::FilterReport rep2 = lpqmf::analyze(lpqmf::build_from_preimages(bad));
  CHECK_FALSE(rep2.passes());
  CHECK_FALSE(rep2.cohen.pass);
  CHECK_FALSE(rep2.cohen.witness.empty());
  CHECK(rep2.qmf_residual < 1e-10);  // it is a quadrature filter, just not a usable one
  CHECK(rep2.sym_residual < 1e-10);
}
