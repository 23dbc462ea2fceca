#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "wco/corpus.hpp"
#include "wco/lacunary.hpp"
#include "wco/multipoly.hpp"
#include "wco/selfmap.hpp"
#include "wco/symbol.hpp"

using namespace wco;

TEST_CASE("polynomial evaluation basics") {
  // z1^2 z2 at (1,1)
  MultiPoly f = MultiPoly::monomial(2, {2, 1}, 1.0);
  CHECK(std::abs(f.eval({1.0, 1.0}) - cdouble(1.0)) < 1e-15);
  MultiPoly c = MultiPoly::constant(3, cdouble(2.5, -1.0));
  CHECK(std::abs(c.eval({0.1, 0.2, 0.3}) - cdouble(2.5, -1.0)) < 1e-15);
}

TEST_CASE("partial derivatives: exact and order-independent") {
  MultiPoly f = MultiPoly::monomial(2, {2, 1}, 1.0);
  // d^2/dz1^2 (z1^2 z2) = 2 z2
  MultiPoly d = f.partial(CoordinateTuple{{1, 1}});
  CHECK(max_coeff_diff(d, MultiPoly::monomial(2, {0, 1}, 2.0)) == 0.0);
  // d/dz1 z2^3 = 0
  CHECK(MultiPoly::monomial(2, {0, 3}, 1.0).partial(1).is_zero());

  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    MultiPoly g = random_poly(2, 4, rng);
    CHECK(max_coeff_diff(g.partial(CoordinateTuple{{1, 2}}),
                         g.partial(CoordinateTuple{{2, 1}})) == 0.0);
  }
}

TEST_CASE("radial derivative: monomial eigenrelation") {
  MultiPoly f = MultiPoly::monomial(2, {2, 1}, 1.0);
  CHECK(max_coeff_diff(f.radial(1), f * cdouble(3.0)) == 0.0);
  CHECK(MultiPoly::constant(2, 7.0).radial(1).is_zero());
  CHECK(MultiPoly::constant(2, 7.0).radial(3).is_zero());

  std::mt19937_64 rng(7);
  for (int n = 0; n <= 6; ++n) {
    std::vector<int> e{3, 0, 2};
    MultiPoly m = MultiPoly::monomial(3, e, cdouble(0.5, 1.5));
    double lam = 1.0;
    for (int k = 0; k < n; ++k) lam *= 5.0;
    CHECK(max_coeff_diff(m.radial(n), m * cdouble(lam)) == 0.0);
  }
}

TEST_CASE("radial derivative matches unrolled <z, grad> recursion") {
  // R g = sum_i z_i d g/dz_i applied twice, against the eigenrelation route
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    MultiPoly f = random_poly(2, 4, rng);
    MultiPoly r1(2);
    for (int p = 1; p <= 2; ++p)
      r1 = r1 + MultiPoly::coordinate(2, p) * f.partial(p);
    MultiPoly r2(2);
    for (int p = 1; p <= 2; ++p)
      r2 = r2 + MultiPoly::coordinate(2, p) * r1.partial(p);
    CHECK(max_coeff_diff(f.radial(1), r1) < 1e-12);
    CHECK(max_coeff_diff(f.radial(2), r2) < 1e-12);
  }
}

TEST_CASE("radial is linear") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    MultiPoly f = random_poly(2, 3, rng), g = random_poly(2, 3, rng);
    const cdouble a(1.25, -0.5), b(-0.75, 2.0);
    for (int n = 1; n <= 4; ++n)
      CHECK(max_coeff_diff((f * a + g * b).radial(n),
                           f.radial(n) * a + g.radial(n) * b) < 1e-10);
  }
}

TEST_CASE("composition: identity, scaling, evaluation commutation") {
  MultiPoly f = MultiPoly::coordinate(2, 1);
  SelfMap id = SelfMap::identity(2);
  CHECK(max_coeff_diff(f.compose(id.components()), f) == 0.0);

  const cdouble c(0.3, 0.4);
  MultiPoly f2 = MultiPoly::monomial(2, {2, 0}, 1.0);
  SelfMap scaled = SelfMap::scaled_identity(2, c);
  CHECK(max_coeff_diff(f2.compose(scaled.components()),
                       MultiPoly::monomial(2, {2, 0}, c * c)) < 1e-15);

  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const int N = 1 + static_cast<int>(rng() % 3);
    MultiPoly g = random_poly(N, 3, rng);
    SelfMap phi = random_self_map(N, 2, rng);
    MultiPoly composed = g.compose(phi.components());
    for (const Point& z : random_points(N, 20, 0.8, rng)) {
      const cdouble lhs = composed.eval(z);
      const cdouble rhs = g.eval(phi.eval(z));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }
}

TEST_CASE("composition respects the term cap") {
  MultiPoly f = MultiPoly::monomial(2, {6, 6}, 1.0);
  std::mt19937_64 rng(23);
  SelfMap phi = random_self_map(2, 3, rng);
  CHECK_THROWS_AS(f.compose(phi.components(), 50), std::length_error);
}

TEST_CASE("lacunary series: construction invariants") {
  LacunarySeries s;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 8;
  for (int k = 0; k <= 8; ++k)
    CHECK(lacunary_ratio_log_defect(s, k) <= 1e-12);
  CHECK(s.exponent(0) == 1);
  CHECK(s.exponent(3) == 1000);
  for (int k = 1; k <= 8; ++k)
    CHECK(s.exponent(k) == 10 * s.exponent(k - 1));
}

TEST_CASE("lacunary evaluation against direct high-precision summation") {
  LacunarySeries s;
  s.dim = 1;
  s.p = 1;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 3;
  CoordinateSeries cs = CoordinateSeries::from_lacunary(s);
  // sum_{k<=3} 10^{-k/2+1/4} 0.5^{10^k}, long-double oracle
  long double want = 0.0L;
  for (int k = 0; k <= 3; ++k) {
    long double a = powl(10.0L, k * (-0.5L) + 0.25L);
    long double z = powl(0.5L, powl(10.0L, k));
    want += a * z;
  }
  const cdouble got = cs.eval({cdouble(0.5, 0.0)});
  CHECK(std::abs(got.real() - static_cast<double>(want)) < 1e-14);
  CHECK(got.imag() == 0.0);
  CHECK_THROWS_AS(cs.eval({cdouble(1.0, 0.0)}), std::domain_error);
}

TEST_CASE("lacunary radial evaluation") {
  LacunarySeries s;
  s.dim = 1;
  s.p = 1;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 4;
  CoordinateSeries cs = CoordinateSeries::from_lacunary(s);
  const Point z{cdouble(0.9, 0.0)};
  // n = 0 equals eval
  CHECK(std::abs(cs.radial_eval(0, z) - cs.eval(z)) == 0.0);
  // long-double term-wise oracle for n = 2
  long double want = 0.0L;
  for (int k = 0; k <= 4; ++k) {
    long double nk = powl(10.0L, k);
    long double a = powl(10.0L, k * (-0.5L) + 0.25L);
    want += a * nk * nk * expl(nk * logl(0.9L));
  }
  const double got = cs.radial_eval(2, z).real();
  CHECK(std::abs(got - static_cast<double>(want)) <=
        1e-12 * static_cast<double>(want));
  // single degree-1 term: R-eigenvalue 1
  CoordinateSeries lin(1, 1, {{1, 0.7}});
  CHECK(std::abs(lin.radial_eval(1, {cdouble(0.3, 0.0)}) -
                 cdouble(0.21, 0.0)) < 1e-15);
}

TEST_CASE("antiderivative: term-wise factors") {
  CoordinateSeries mono(1, 1, {{4, 3.0}});
  const auto a1 = mono.antiderivative(1);
  REQUIRE(a1.terms().size() == 1);
  CHECK(a1.terms()[0].exponent == 5);
  CHECK(a1.terms()[0].coeff == doctest::Approx(3.0 / 5.0).epsilon(1e-15));
  const auto a2 = mono.antiderivative(2);
  CHECK(a2.terms()[0].exponent == 6);
  CHECK(a2.terms()[0].coeff == doctest::Approx(3.0 / 30.0).epsilon(1e-15));
}

TEST_CASE("antiderivative then radial reproduces the gap-series derivative") {
  // R^(n) of the (n-1)-fold antiderivative tracks R s * z^(n-1) term by term
  LacunarySeries s;
  s.dim = 1;
  s.p = 1;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 6;
  const int n = 3;
  CoordinateSeries base = CoordinateSeries::from_lacunary(s);
  CoordinateSeries anti = base.antiderivative(n - 1);
  const Point z{cdouble(0.995, 0.0)};
  const cdouble lhs = anti.radial_eval(n, z);
  const cdouble rhs = base.radial_eval(1, z) * std::pow(0.995, n - 1);
  // per-term ratio (m+n-1)^n / (m (m+1) ... (m+n-1)) stays within [1, 3^n]
  CHECK(std::abs(lhs) >= std::abs(rhs) * 0.99);
  CHECK(std::abs(lhs) <= std::abs(rhs) * std::pow(3.0, n));
}

TEST_CASE("self-map certification") {
  SelfMapEvidence ev = certify_self_map(SelfMap::scaled_identity(2, 0.5));
  CHECK(ev.ok);
  CHECK(ev.margin > 0.49);
  // identity: margin is the last dyadic gap, still positive
  SelfMapEvidence id = certify_self_map(SelfMap::identity(2));
  CHECK(id.ok);
  CHECK(id.sup < 1.0);
}

TEST_CASE("symbol jets: polynomial, product, and coordinate-moebius") {
  std::mt19937_64 rng(31);
  MultiPoly f = random_poly(2, 3, rng);
  MultiPoly g = random_poly(2, 3, rng);
  Symbol sf(f), sg(g);
  Symbol prod = sf * sg;
  const MultiPoly direct = f * g;
  for (const Point& z : random_points(2, 10, 0.9, rng))
    for (int n = 0; n <= 4; ++n) {
      const cdouble want = direct.radial(n).eval(z);
      const cdouble got = prod.radial_at(n, z);
      CHECK(std::abs(got - want) <= 1e-11 * std::max(1.0, std::abs(want)));
    }

  // moebius coordinate factor against its polynomial truncation is not
  // exact; check against the one-variable Euler recursion by stencil-free
  // finite differences in t along rays instead: R h(x) = x h'(x).
  const cdouble a(0.4, -0.2);
  Symbol mob = Symbol::mobius_coordinate(2, 1, a);
  for (const Point& z : random_points(2, 10, 0.8, rng)) {
    const cdouble x = z[0];
    const cdouble den = 1.0 - std::conj(a) * x;
    const cdouble h1 = (1.0 - std::norm(a)) / (den * den);
    CHECK(std::abs(mob.radial_at(1, z) - x * h1) < 1e-12);
    // R^2 h = x h' + x^2 h''
    const cdouble h2 = 2.0 * std::conj(a) * (1.0 - std::norm(a)) /
                       (den * den * den);
    CHECK(std::abs(mob.radial_at(2, z) - (x * h1 + x * x * h2)) < 1e-12);
  }
}

TEST_CASE("window policy propagates through products and powers") {
  LacunarySeries s;
  s.dim = 2;
  s.p = 1;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 8;
  Symbol psi = lacunary_symbol(s, 1);
  REQUIRE(psi.window_policy().has_value());
  CHECK(psi.window_policy()->windows.size() == 5);  // k = 2..6
  Symbol prod = psi * Symbol(MultiPoly::coordinate(2, 1));
  CHECK(prod.window_policy().has_value());
  Symbol pw = psi.pow(3);
  CHECK(pw.window_policy().has_value());
}
