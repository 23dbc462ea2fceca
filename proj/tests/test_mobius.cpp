#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wco/corpus.hpp"
#include "wco/mobius.hpp"
#include "wco/sampling.hpp"

using namespace wco;

TEST_CASE("moebius map exchanges zero and its center") {
  std::mt19937_64 rng(1);
  for (const Point& a : random_points(3, 20, 0.9, rng)) {
    const MobiusMap g(a);
    CHECK(dist(g.apply(Point(3, 0.0)), a) < 1e-12);
    CHECK(norm(g.apply(a)) < 1e-12);
    CHECK(g.s() * g.s() + norm_sq(a) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("reflection case") {
  const MobiusMap g(Point(2, 0.0));
  const Point z{cdouble(0.3, 0.1), cdouble(-0.2, 0.5)};
  CHECK(dist(g.apply(z), scale(z, -1.0)) == 0.0);
  CHECK(involution_max_deviation(g, 50) == 0.0);
}

TEST_CASE("modulus identity at random pairs") {
  std::mt19937_64 rng(2);
  const auto centers = random_points(3, 12, 0.85, rng);
  const auto points = random_points(3, 12, 0.95, rng);
  for (const auto& a : centers) {
    const MobiusMap g(a);
    for (const auto& z : points) {
      const double lhs = 1.0 - norm_sq(g.apply(z));
      const double rhs = (1.0 - norm_sq(a)) * (1.0 - norm_sq(z)) /
                         std::norm(1.0 - herm(z, a));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      // self-map property
      CHECK(norm(g.apply(z)) < 1.0);
    }
  }
}

TEST_CASE("involution at interior and boundary-adjacent points") {
  const MobiusMap g(coordinate_axis(3, 1, 0.5));
  CHECK(involution_max_deviation(g, 100, 0.9, 3) <= 1e-10);
  // |z| = 0.999, looser near the pole
  double worst = 0.0;
  for (const auto& d : sphere_directions(3, 64, 4)) {
    const Point z = scale(d, 0.999);
    worst = std::max(worst, dist(g.apply(g.apply(z)), z));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("near-pole warning fires outside the ball") {
  const MobiusMap g(coordinate_axis(2, 1, 0.9));
  bool warn = false;
  // <z, alpha> = 1 requires z_1 = 1/0.9 outside the closed ball
  g.apply({cdouble(1.0 / 0.9, 0.0), cdouble(0.0, 0.0)}, &warn);
  CHECK(warn);
  warn = true;
  g.apply({cdouble(0.5, 0.0), cdouble(0.0, 0.0)}, &warn);
  CHECK_FALSE(warn);
}

TEST_CASE("radial derivative sup: reflection approaches the sampled radius") {
  const MobiusMap g(Point(2, 0.0));
  const auto est = radial_derivative_sup(g, 1, 32, 12, 1);
  // R(-z) = -z: sup |z| over the grid
  CHECK(est.sup > 0.99);
  CHECK(est.sup <= 1.0 + 1e-9);
}

TEST_CASE("radial derivative sup: stability under direction refinement") {
  const MobiusMap g(coordinate_axis(2, 1, 0.3));
  const auto coarse = radial_derivative_sup(g, 1, 64, 10, 1);
  const auto fine = radial_derivative_sup(g, 1, 128, 10, 1);
  CHECK(coarse.sup > 0.0);
  CHECK(std::isfinite(fine.sup));
  CHECK(std::abs(fine.sup - coarse.sup) <= 0.02 * fine.sup);
}

TEST_CASE("radial derivative sup: second order finite on rational map") {
  const MobiusMap g(coordinate_axis(2, 1, 0.4));
  const auto est = radial_derivative_sup(g, 2, 48, 10, 1);
  CHECK(std::isfinite(est.sup));
  CHECK(est.sup > 0.0);
  CHECK(est.sup < 1e3);
}

TEST_CASE("weight ratio trace: reflection gives ratio one") {
  const MobiusMap g(Point(3, 0.0));
  const auto tr = weight_ratio_trend(standard_weight(1.0), g,
                                     dyadic_radii(3, 12),
                                     coordinate_axis(3, 1, 1.0), 1);
  for (double v : tr.full_ratio) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("weight ratio trace: closed form along the center ray") {
  const MobiusMap g(coordinate_axis(3, 1, 0.5));
  const auto radii = dyadic_radii(3, 14);
  const auto tr = weight_ratio_trend(standard_weight(1.0), g, radii,
                                     coordinate_axis(3, 1, 1.0), 1);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double cf = std::norm(1.0 - 0.5 * radii[i]) / 0.75;
    CHECK(tr.full_ratio[i] == doctest::Approx(cf).epsilon(1e-10));
  }
  // the trace is decreasing toward a positive limit, and stays bounded
  CHECK(tr.sup_full <= (1.0 + 0.5) / (1.0 - 0.5) + 1e-9);
  CHECK(tr.full_ratio.back() == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
  CHECK(tr.sup_coordinate <= tr.sup_full + 1e-12);
}

TEST_CASE("component modulus data at sampled points") {
  std::mt19937_64 rng(6);
  // generic centers with strictly smaller p-component
  int candidate_violations = 0;
  for (int trial = 0; trial < 10; ++trial) {
    Point a = random_points(3, 1, 0.8, rng)[0];
    const MobiusMap g(a);
    int p = 1 + static_cast<int>(rng() % 3);
    double apm = std::abs(a[p - 1]);
    if (apm > 0.99 * norm(a)) continue;
    for (const Point& z : random_points(3, 10, 0.95, rng)) {
      const ComponentBound cb = component_modulus_bound(g, p, z);
      // the constants inequality is strict whenever |a_p| < |a|
      CHECK(cb.a_p_sq + cb.a_sq < 1.0);
      // the modulus-identity route reproduces |gamma_p(z)|^2 exactly
      CHECK(cb.lhs == doctest::Approx(cb.exact_route).epsilon(1e-12));
      if (cb.lhs > cb.rhs + 1e-10) ++candidate_violations;
    }
  }
  // the candidate component-wise bound is not a bound: sampled
  // counterexamples exist (recorded discrepancy)
  CHECK(candidate_violations > 0);
}
