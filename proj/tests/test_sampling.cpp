#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wco/corpus.hpp"
#include "wco/multipoly.hpp"
#include "wco/sampling.hpp"

using namespace wco;

TEST_CASE("sphere directions: unit norm, determinism, antipodal closure") {
  const auto d1 = sphere_directions(3, 64, 42);
  const auto d2 = sphere_directions(3, 64, 42);
  REQUIRE(d1.size() == d2.size());
  for (std::size_t i = 0; i < d1.size(); ++i) {
    CHECK(norm(d1[i]) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dist(d1[i], d2[i]) == 0.0);
  }
  // axes come first, and the sampled tail is antipodally paired
  CHECK(dist(d1[0], coordinate_axis(3, 1, 1.0)) == 0.0);
  CHECK(dist(d1[1], coordinate_axis(3, 1, -1.0)) == 0.0);
  for (std::size_t i = 6; i + 1 < d1.size(); i += 2)
    CHECK(dist(d1[i], scale(d1[i + 1], -1.0)) < 1e-15);
  // seeds shift the sequence
  const auto d3 = sphere_directions(3, 64, 43);
  CHECK(dist(d1[8], d3[8]) > 1e-6);
}

TEST_CASE("ball points stay inside the requested radius") {
  for (const auto& z : ball_points(2, 256, 0.9, 5))
    CHECK(norm(z) <= 0.9 + 1e-12);
}

TEST_CASE("dyadic radii schedule") {
  const auto r = dyadic_radii(3, 6);
  REQUIRE(r.size() == 4);
  CHECK(r[0] == doctest::Approx(1.0 - 1.0 / 8.0));
  CHECK(r[3] == doctest::Approx(1.0 - 1.0 / 64.0));
}

TEST_CASE("finite-difference weights reproduce classical stencils") {
  // central first derivative on {-h, 0, h}: [-1/2, 0, 1/2]/h
  const auto w1 = fd_weights(0.0, {-1.0, 0.0, 1.0}, 1);
  CHECK(w1[0] == doctest::Approx(-0.5));
  CHECK(w1[1] == doctest::Approx(0.0));
  CHECK(w1[2] == doctest::Approx(0.5));
  const auto w2 = fd_weights(0.0, {-1.0, 0.0, 1.0}, 2);
  CHECK(w2[0] == doctest::Approx(1.0));
  CHECK(w2[1] == doctest::Approx(-2.0));
  CHECK(w2[2] == doctest::Approx(1.0));
}

TEST_CASE("euler derivative: exact on monomials of the ray variable") {
  // g(t) = t^d: (t d/dt)^k g (1) = d^k
  for (int d = 0; d <= 6; ++d)
    for (int k = 1; k <= 4; ++k) {
      const cdouble got = euler_derivative(
          [d](double t) { return cdouble(std::pow(t, d), 0.0); }, k);
      // stencils are exact on polynomials; the floor is roundoff through
      // the h^-k weights
      CHECK(std::abs(got - cdouble(std::pow(double(d), k), 0.0)) < 1e-7);
    }
}

TEST_CASE("ray radial derivative matches the symbolic route on polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 8; ++t) {
    const MultiPoly f = random_poly(2, 4, rng);
    for (const Point& z : random_points(2, 6, 0.9, rng))
      for (int k = 1; k <= 4; ++k) {
        const cdouble got = ray_radial_derivative(
            [&](const Point& w) { return f.eval(w); }, z, k);
        const cdouble want = f.radial(k).eval(z);
        CHECK(std::abs(got - want) <= 1e-7 * std::max(1.0, std::abs(want)));
      }
  }
}

TEST_CASE("stencil consistency order under step halving") {
  // fast-growing analytic target so truncation dominates roundoff at the
  // probe steps; halving must shrink the error at second order or better
  auto g = [](double t) { return cdouble(std::exp(3.0 * t), 0.0); };
  auto euler2_err = [&](double h) {
    // R g = 3 t e^{3t}; R^2 g = 3 t e^{3t} + 9 t^2 e^{3t}
    const double want = 12.0 * std::exp(3.0);
    return std::abs(euler_derivative(g, 2, h) - cdouble(want, 0.0));
  };
  const double e1 = euler2_err(0.4);
  const double e2 = euler2_err(0.2);
  CHECK(e2 <= e1 / 4.0 + 1e-12);
}

TEST_CASE("compass search finds an interior minimum") {
  // |z - c|^2 with c inside the ball
  const Point c{cdouble(0.2, -0.3), cdouble(-0.1, 0.4)};
  const Point got = compass_minimize(
      [&](const Point& z) { return norm_sq(sub(z, c)); },
      Point{cdouble(0.0, 0.0), cdouble(0.0, 0.0)}, 0.999, 0.2, 1e-9);
  CHECK(dist(got, c) < 1e-6);
}
