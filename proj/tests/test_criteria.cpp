#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "wco/criteria.hpp"
#include "wco/scenarios.hpp"

using namespace wco;

namespace {

GridSpec test_grid() {
  GridSpec g;
  g.directions = 64;
  g.m_lo = 3;
  g.m_hi = 12;
  g.seed = 5;
  return g;
}

SymbolPair contraction_pair(int N = 2) {
  return SymbolPair::from_map(Symbol::one(N), SelfMap::scaled_identity(N, 0.5),
                              1);
}

SymbolPair identity_pair(int N = 2) {
  return SymbolPair::from_map(Symbol::one(N), SelfMap::identity(N), 1);
}

Symbol example_psi(int n) {
  LacunarySeries s;
  s.dim = 2;
  s.p = 1;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 8;
  return lacunary_symbol(s, n - 1);
}

}  // namespace

TEST_CASE("membership: polynomials under standard weights decay to Zero") {
  const Symbol f(MultiPoly::monomial(2, {3, 1}, cdouble(1.0, 0.5)));
  const auto rep = membership_class(f, standard_weight(0.5), 2, test_grid());
  CHECK(rep.cls == MembershipClass::Zero);
  CHECK(rep.sup_trace.slope() < -0.02);
}

TEST_CASE("membership: zero function and constants") {
  const auto z =
      membership_class(Symbol(MultiPoly(2)), standard_weight(1.0), 1,
                       test_grid());
  CHECK(z.cls == MembershipClass::Zero);
  // constants have vanishing radial derivative for n >= 1
  const auto c = membership_class(Symbol::one(2), standard_weight(1.0), 1,
                                  test_grid());
  CHECK(c.cls == MembershipClass::Zero);
}

TEST_CASE("membership: gap-series antiderivative classifies Plus in windows") {
  const int n = 2;
  const auto rep =
      membership_class(example_psi(n), standard_weight(0.5), n, test_grid());
  CHECK(rep.cls == MembershipClass::Plus);
  // the window values sit near 2^alpha/4 and above eps_plus
  CHECK(rep.inf_trace.last() > 1e-3);
}

TEST_CASE("condition: constant multiplier fails Plus") {
  const auto rep =
      condition_n_mu(identity_pair(), standard_weight(1.0), 1, test_grid());
  CHECK(rep.psi.cls == MembershipClass::Zero);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("condition on the gap-series pair: products keep the lower bound") {
  // the weighted top derivative of psi * phi_p^j inherits the window lower
  // bound, so the products do not classify Zero and the condition fails
  const int n = 2;
  const SymbolPair pair =
      SymbolPair::from_map(example_psi(n), SelfMap::identity(2), 1);
  const auto rep =
      condition_n_mu(pair, standard_weight(0.5), n, test_grid());
  CHECK(rep.psi.cls == MembershipClass::Plus);
  for (const auto& prod : rep.products) {
    CHECK(prod.cls != MembershipClass::Zero);
    CHECK(prod.sup_trace.last() > 0.1);
  }
  CHECK_FALSE(rep.pass);
}

TEST_CASE("lambda scan: j = 0 restates the Plus membership") {
  const int n = 2;
  const SymbolPair pair =
      SymbolPair::from_map(example_psi(n), SelfMap::identity(2), 1);
  const auto scan =
      restricted_inf_scan(pair, standard_weight(0.5), n, 0, test_grid());
  CHECK(scan.found);
  CHECK(scan.lambda <= 0.99);
}

TEST_CASE("lambda scan: constant multiplier has no lambda") {
  const auto scan = restricted_inf_scan(identity_pair(), standard_weight(1.0), 1,
                                     0, test_grid());
  CHECK_FALSE(scan.found);
}

TEST_CASE("lambda scan: weighted higher script terms of the pair decay") {
  // R^(s) psi is bounded for s < n, so mu|B_1^n| -> 0 and the scan reports
  // no lambda for j = 1 on this configuration
  const int n = 2;
  const SymbolPair pair =
      SymbolPair::from_map(example_psi(n), SelfMap::identity(2), 1);
  const auto scan =
      restricted_inf_scan(pair, standard_weight(0.5), n, 1, test_grid());
  CHECK_FALSE(scan.found);
}

TEST_CASE("A1 on the contraction: bounded evidence") {
  const auto rep = boundedness_A1(contraction_pair(), standard_weight(0.5),
                                  standard_weight(0.5), 1, 1, test_grid());
  CHECK(rep.verdict == Verdict::BoundedEvidence);
  CHECK(rep.norm_estimate > 0.0);
  CHECK(rep.traces.size() == 2);
}

TEST_CASE("A1 degenerate orders reduce to the weighted ratio quantity") {
  // n = m = 0: single j = 0 trace of mu(z)|psi(z)| / nu(|phi_p(z)|)
  const auto rep = boundedness_A1(contraction_pair(), standard_weight(1.0),
                                  standard_weight(1.0), 0, 0, test_grid());
  REQUIRE(rep.traces.size() == 1);
  // closed form at radius r along the axis: (1-r^2)/(1-r^2/4) <= 1
  CHECK(rep.traces[0].max_value() <= 1.0 + 1e-9);
  CHECK(rep.verdict == Verdict::BoundedEvidence);
}

TEST_CASE("A1 norm representative tracks delta-norm comparisons") {
  // strongly vanishing target weight against a barely vanishing source
  const SymbolPair pair = SymbolPair::from_map(
      Symbol(MultiPoly::monomial(2, {4, 0}, 1.0)), SelfMap::identity(2), 1);
  const auto rep = boundedness_A1(pair, standard_weight(0.2),
                                  standard_weight(2.0), 1, 1, test_grid());
  // nu barely vanishing: I^k_nu(1) finite, delta norms bounded; mu strong:
  // traces decay; the verdict cannot be divergent
  CHECK(rep.verdict != Verdict::DivergentEvidence);
}

TEST_CASE("A2 equals A1 when m = 0") {
  const auto a1 = boundedness_A1(contraction_pair(), standard_weight(0.5),
                                 standard_weight(0.5), 1, 0, test_grid());
  const auto a2 = boundedness_A2(contraction_pair(), standard_weight(0.5),
                                 standard_weight(0.5), 1, 0, test_grid());
  REQUIRE(a1.traces.size() == a2.traces.size());
  for (std::size_t j = 0; j < a1.traces.size(); ++j)
    for (std::size_t i = 0; i < a1.traces[j].values.size(); ++i)
      CHECK(a1.traces[j].values[i] ==
            doctest::Approx(a2.traces[j].values[i]).epsilon(1e-12));
  CHECK(a1.verdict == a2.verdict);
}

TEST_CASE("A2 on the contraction: singular factors stay bounded") {
  const auto rep = boundedness_A2(contraction_pair(), standard_weight(0.5),
                                  standard_weight(0.5), 1, 1, test_grid());
  CHECK(rep.verdict == Verdict::BoundedEvidence);
  REQUIRE(rep.traces.size() == 3);  // j = 0, 1 and the k = 1 singular factor
}

TEST_CASE("A2 on the identity: the singular factor diverges") {
  const auto rep = boundedness_A2(identity_pair(), standard_weight(1.0),
                                  standard_weight(1.0), 1, 1, test_grid());
  CHECK(rep.verdict == Verdict::DivergentEvidence);
  // the diverging trace is the k = 1 singular factor, slope about one
  const auto& sing = rep.traces.back();
  CHECK(sing.slope() > 0.5);
}

TEST_CASE("C1 on the contraction: restricted sups vanish") {
  const auto rep =
      compactness_C1(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 1, std::nullopt, test_grid());
  CHECK(rep.verdict == Verdict::CompactEvidence);
  REQUIRE(rep.n0.has_value());
  CHECK(*rep.n0 == 2);  // transition order 1 for alpha = 1/2
  // restriction monotonicity: traces nonincreasing in r
  for (const auto& t : rep.traces)
    for (std::size_t i = 1; i < t.values.size(); ++i)
      CHECK(t.values[i] <= t.values[i - 1] + 1e-12);
}

TEST_CASE("C1 rejects an out-of-pattern n0") {
  CHECK_THROWS_AS(
      compactness_C1(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 1, 0, test_grid()),
      HypothesisMismatch);
}

TEST_CASE("C1 on the identity with m = 0: not compact") {
  // order-preserving identity operator: the j = n quantity carries the
  // reciprocal-weight delta factor and stays at r^n
  const auto rep =
      compactness_C1(identity_pair(), standard_weight(1.0),
                     standard_weight(1.0), 1, 0, std::nullopt, test_grid());
  CHECK(rep.verdict == Verdict::NotCompactEvidence);
  REQUIRE(rep.n0.has_value());
  CHECK(*rep.n0 == 0);
}

TEST_CASE("condition with a constant component factor") {
  // psi keeps its window lower bound; multiplying by a constant cannot
  // push the products into the Zero class
  const int n = 2;
  const SymbolPair pair = SymbolPair::component_only(
      example_psi(n), Symbol::constant(2, 0.99), 1);
  const auto rep =
      condition_n_mu(pair, standard_weight(0.5), n, test_grid());
  CHECK(rep.psi.cls == MembershipClass::Plus);
  for (const auto& prod : rep.products)
    CHECK(prod.cls != MembershipClass::Zero);
  CHECK_FALSE(rep.pass);
}

TEST_CASE("C2 on the identity: not compact") {
  const auto rep =
      compactness_C2(identity_pair(), standard_weight(1.0),
                     standard_weight(1.0), 1, 1, std::nullopt, test_grid());
  CHECK(rep.verdict == Verdict::NotCompactEvidence);
}

TEST_CASE("C2 on the contraction: compact, and m = 0 matches C1") {
  const auto c2 =
      compactness_C2(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 1, std::nullopt, test_grid());
  CHECK(c2.verdict == Verdict::CompactEvidence);

  const auto c1m0 =
      compactness_C1(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 0, std::nullopt, test_grid());
  const auto c2m0 =
      compactness_C2(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 0, std::nullopt, test_grid());
  CHECK(c1m0.verdict == c2m0.verdict);
}

TEST_CASE("A1 with a window-policy multiplier: bounded on the contraction") {
  // gap-series multiplier over a strict contraction: the j = 0 trace
  // carries the window lower bound (roughly flat), delta-norms stay
  // bounded, so the criterion grades bounded
  const int n = 2;
  const SymbolPair pair = SymbolPair::from_map(
      example_psi(n), SelfMap::scaled_identity(2, 0.5), 1);
  const auto rep = boundedness_A1(pair, standard_weight(0.5),
                                  standard_weight(0.5), n, 1, test_grid());
  CHECK(rep.verdict == Verdict::BoundedEvidence);
  // window radii drive the traces
  CHECK(rep.traces[0].radii.size() == 15);  // 5 windows x 3 radii
  CHECK(rep.traces[0].last() > 0.1);
}

TEST_CASE("A1 with a tabulated source weight matches the analytic verdict") {
  std::vector<std::pair<double, double>> table;
  for (int i = 0; i <= 400; ++i) {
    const double t = i / 400.0 * 0.99995;
    table.emplace_back(t, std::sqrt(1.0 - t * t));
  }
  const RadialWeight nu_tab = tabulated_weight(table, 0.25, 1.0, 0.4);
  const auto rep = boundedness_A1(contraction_pair(), nu_tab,
                                  standard_weight(0.5), 1, 1, test_grid());
  CHECK(rep.verdict == Verdict::BoundedEvidence);
}

TEST_CASE("component-only pair with a rational coordinate factor") {
  // psi a gap series, phi_p the coordinate disc automorphism factor;
  // everything flows through the pointwise jet algebra
  const int n = 2;
  LacunarySeries s;
  s.dim = 2;
  s.p = 1;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 8;
  const Symbol psi = lacunary_symbol(s, 0, 1.5);
  const Symbol phi_p = Symbol::mobius_coordinate(2, 1, cdouble(0.3, 0.0));
  const SymbolPair pair = SymbolPair::component_only(psi, phi_p, 1);
  const auto cond =
      condition_n_mu(pair, standard_weight(0.5), n, test_grid());
  CHECK(cond.psi.cls == MembershipClass::Plus);
  // the products inherit the window policy and evaluate cleanly
  REQUIRE(cond.products.size() == 2);
  for (const auto& p : cond.products)
    CHECK(p.sup_trace.values.size() == 15);
  // boundedness machinery accepts component-only pairs
  const auto rep = boundedness_A1(pair, standard_weight(0.5),
                                  standard_weight(0.5), n, 0, test_grid());
  CHECK(rep.traces.size() == static_cast<std::size_t>(n + 1));
}

TEST_CASE("C2 restriction flag: component gate matches on the contraction") {
  const auto by_full =
      compactness_C2(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 1, std::nullopt, test_grid(),
                     true);
  const auto by_comp =
      compactness_C2(contraction_pair(), standard_weight(0.5),
                     standard_weight(0.5), 1, 1, std::nullopt, test_grid(),
                     false);
  CHECK(by_full.verdict == by_comp.verdict);
}

TEST_CASE("compact configuration sends normalized coordinate powers to zero") {
  // probe family f_s = z_p^s / ||z_p^s||: under the contraction the image
  // norms must decay toward zero with s
  const RadialWeight nu = standard_weight(0.5);
  const RadialWeight mu = standard_weight(0.5);
  const int n = 1, m = 1;
  const SymbolPair pair = contraction_pair();
  const GridSpec grid = test_grid();
  const EvalGrid eg =
      make_eval_grid(2, grid.directions, grid.m_lo, grid.m_hi, grid.seed);
  std::vector<double> norms;
  for (int s = 1; s <= 10; ++s) {
    std::vector<int> e{s, 0};
    const MultiPoly f = MultiPoly::monomial(2, e, 1.0);
    const double fnorm = graded_norm(Symbol(f), nu, n + m, eg);
    double sup = 0.0;
    for (const auto& d : eg.directions)
      for (double r : eg.radii) {
        const Point z = scale(d, r);
        sup = std::max(sup, mu(r) * std::abs(radial_weighted_compose_at(
                                        pair.psi, f, *pair.phi, n, z)));
      }
    const double wnorm =
        std::abs(pair.psi.at_zero() * f.eval(pair.phi->at_zero())) + sup;
    norms.push_back(wnorm / fnorm);
  }
  CHECK(norms.back() < 0.02 * norms.front());
  CHECK(norms[9] < norms[4]);
}

TEST_CASE("stilde: identity map satisfies both classes") {
  const auto rep = stilde_membership(SelfMap::identity(2), 1, test_grid());
  CHECK(rep.stilde);
  CHECK(rep.sstar);
  CHECK(rep.min_modulus <= 1e-3);
  CHECK(std::abs(rep.sup_component - rep.sup_full) <= 1e-3);
}

TEST_CASE("stilde: affine-shift sample map") {
  const auto rep =
      stilde_membership(sample_map_shifted_affine(), 1, test_grid());
  CHECK(rep.stilde);
  CHECK_FALSE(rep.sstar);
  CHECK(rep.sup_component == doctest::Approx(0.75).epsilon(1e-3));
  CHECK_FALSE(disc_point_covered(sample_map_shifted_affine(), 1,
                                 cdouble(0.0, -0.5), 0.05, test_grid()));
}

TEST_CASE("stilde: diagonal sample map") {
  const auto rep = stilde_membership(sample_map_diagonal(), 1, test_grid());
  CHECK(rep.stilde);
  CHECK_FALSE(rep.sstar);
}

TEST_CASE("probe ratios: contraction stays near the norm representative") {
  const auto a1 = boundedness_A1(contraction_pair(), standard_weight(0.5),
                                 standard_weight(0.5), 1, 1, test_grid());
  const auto probe = probe_operator_ratios(contraction_pair(),
                                           standard_weight(0.5),
                                           standard_weight(0.5), 1, 2, 12,
                                           test_grid());
  CHECK(probe.max_ratio <= 10.0 * a1.norm_estimate);
  CHECK(probe.max_ratio > 0.0);
}

TEST_CASE("probe ratios grow with degree in the singular configuration") {
  const auto probe = probe_operator_ratios(identity_pair(),
                                           standard_weight(1.0),
                                           standard_weight(1.0), 2, 1, 16,
                                           test_grid());
  REQUIRE(probe.ratios.size() == 16);
  CHECK(probe.ratios[15] >= 2.0 * probe.ratios[3]);
}
