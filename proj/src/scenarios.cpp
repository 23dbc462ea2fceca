#include "wco/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "wco/sampling.hpp"

namespace wco {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CheckResult check_bool(const std::string& name, bool expected, bool actual,
                       const std::string& detail = "") {
  CheckResult c;
  c.name = name;
  c.expected = expected ? "yes" : "no";
  c.actual = actual ? "yes" : "no";
  c.pass = expected == actual;
  c.detail = detail;
  return c;
}

CheckResult check_le(const std::string& name, double value, double bound,
                     const std::string& detail = "") {
  CheckResult c;
  c.name = name;
  c.expected = "<= " + fmt(bound);
  c.actual = fmt(value);
  c.pass = value <= bound;
  c.detail = detail;
  return c;
}

CheckResult check_report(const std::string& name, const std::string& actual,
                         const std::string& detail = "") {
  CheckResult c;
  c.name = name;
  c.expected = "(reported)";
  c.actual = actual;
  c.pass = true;
  c.detail = detail;
  return c;
}

}  // namespace

bool ScenarioResult::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SelfMap sample_map_shifted_affine() {
  // (1/2)(z1 + 1/2, z2/2)
  MultiPoly f1 = MultiPoly::coordinate(2, 1) * 0.5 +
                 MultiPoly::constant(2, 0.25);
  MultiPoly f2 = MultiPoly::coordinate(2, 2) * 0.25;
  return SelfMap({f1, f2});
}

SelfMap sample_map_square_shift() {
  // (1/5)(3 z1, (3/2) z2^2 + i, z3)
  MultiPoly f1 = MultiPoly::coordinate(3, 1) * 0.6;
  MultiPoly f2 = MultiPoly::monomial(3, {0, 2, 0}, 0.3) +
                 MultiPoly::constant(3, cdouble(0.0, 0.2));
  MultiPoly f3 = MultiPoly::coordinate(3, 3) * 0.2;
  return SelfMap({f1, f2, f3});
}

SelfMap sample_map_diagonal() {
  // e^{i a_k} c_k z_k with the largest |c| in coordinate 1
  const double ph[3] = {0.3, 1.1, 2.0};
  const double c[3] = {0.8, 0.5, 0.3};
  std::vector<MultiPoly> comps;
  for (int k = 0; k < 3; ++k)
    comps.push_back(MultiPoly::coordinate(3, k + 1) *
                    (c[k] * cdouble(std::cos(ph[k]), std::sin(ph[k]))));
  return SelfMap(std::move(comps));
}

TransferReport transfer_check(const std::function<Point(const Point&)>& map,
                              int N, int p, const RadialWeight& nu,
                              const std::function<double(const Point&)>& h,
                              int j, const GridSpec& grid) {
  TransferReport rep;
  const auto dirs = sphere_directions(N, grid.directions, grid.seed);
  const auto radii = dyadic_radii(grid.m_lo, grid.m_hi);
  for (const auto& d : dirs)
    for (double r : radii) {
      const Point z = scale(d, r);
      const Point w = map(z);
      rep.lhs_sup = std::max(rep.lhs_sup, h(z) * delta_norm(nu, j, norm(w)));
      rep.component_sup = std::max(
          rep.component_sup, h(z) * delta_norm(nu, j, std::abs(w[p - 1])));
    }
  rep.ratio = rep.component_sup > 0.0 ? rep.lhs_sup / rep.component_sup : 0.0;
  return rep;
}

namespace {

// graded norm of z -> f(T(z)) with radial derivatives from ray stencils
double stencil_graded_norm(const std::function<cdouble(const Point&)>& F,
                           int N, const RadialWeight& w, int n,
                           const GridSpec& grid, double step) {
  const auto dirs = sphere_directions(N, grid.directions, grid.seed);
  const auto radii = dyadic_radii(grid.m_lo, grid.m_hi);
  double sup = 0.0;
  for (const auto& d : dirs)
    for (double r : radii) {
      const Point z = scale(d, r);
      const double v = w(r) * std::abs(ray_radial_derivative(F, z, n, step));
      sup = std::max(sup, v);
    }
  return std::abs(F(Point(N, cdouble(0.0)))) + sup;
}

}  // namespace

CgammaReport cgamma_check(const MobiusMap& g, const RadialWeight& w, int n,
                          const std::vector<MultiPoly>& corpus,
                          const GridSpec& grid) {
  CgammaReport rep;
  const int N = g.dim();
  const double step =
      std::min(0.05, 0.25 * (1.0 / std::max(norm(g.center()), 1e-9) - 1.0) / 4.0);
  for (const MultiPoly& f : corpus) {
    const double base = stencil_graded_norm(
        [&](const Point& z) { return f.eval(z); }, N, w, n, grid, 0.05);
    if (base <= 0.0) continue;
    const double comp = stencil_graded_norm(
        [&](const Point& z) { return f.eval(g.apply(z)); }, N, w, n, grid,
        step);
    const double round = stencil_graded_norm(
        [&](const Point& z) { return f.eval(g.apply(g.apply(z))); }, N, w, n,
        grid, 0.05);
    rep.max_forward_ratio = std::max(rep.max_forward_ratio, comp / base);
    if (comp > 0.0)
      rep.max_inverse_ratio = std::max(rep.max_inverse_ratio, base / comp);
    rep.max_roundtrip_defect =
        std::max(rep.max_roundtrip_defect, std::abs(round / base - 1.0));
  }
  return rep;
}

LowerBoundReport lacunary_lowerbound_check(double alpha, int q, int K) {
  LowerBoundReport rep;
  rep.all_positive = true;
  rep.tails_ok = true;
  LacunarySeries s;
  s.dim = 1;
  s.p = 1;
  s.q = q;
  s.alpha = alpha;
  s.K = K;
  const CoordinateSeries series = CoordinateSeries::from_lacunary(s);

  for (int k = 2; k <= K - 2; ++k) {
    WindowMargin wm;
    wm.k = k;
    const RadiusWindow win = s.window(k, 0.5);
    // five radii, geometric across the window gap
    std::vector<double> rs;
    for (int i = 0; i < 5; ++i) {
      const double f = i / 4.0;
      rs.push_back(1.0 - std::exp(std::log(1.0 - win.lo) * (1.0 - f) +
                                  std::log(1.0 - win.hi) * f));
    }
    wm.min_margin = 1e300;
    for (double r : rs) {
      const Point z{cdouble(r, 0.0)};
      const double deriv = std::abs(series.radial_eval(1, z));
      const double bound = 0.25 * std::pow(1.0 - r, -alpha);
      wm.min_margin = std::min(wm.min_margin, deriv - bound);
    }
    // decomposition terms: principal at the inner edge, tails at the outer
    const double r_in = win.lo, r_out = win.hi;
    wm.q1 = s.coeff(k) * static_cast<double>(s.exponent(k)) *
            std::exp((static_cast<double>(s.exponent(k)) + 1.0) *
                     std::log(r_in));
    wm.q1_bound =
        std::pow(static_cast<double>(q), (k + 0.5) * alpha) / 3.0;
    wm.q2 = 0.0;
    for (int i = 0; i < k; ++i)
      wm.q2 += s.coeff(i) * static_cast<double>(s.exponent(i)) *
               std::pow(r_out, static_cast<double>(s.exponent(i)));
    wm.q2_bound = std::pow(static_cast<double>(q), (k + 0.5) * alpha) /
                  (std::pow(static_cast<double>(q), alpha) - 1.0);
    wm.q3 = 0.0;
    for (int i = k + 1; i <= K; ++i) {
      const double e = static_cast<double>(s.exponent(i));
      const double lt = s.log_coeff(i) + std::log(e) + e * std::log(r_out);
      if (lt > -745.0) wm.q3 += std::exp(lt);
    }
    wm.tail = lacunary_tail(s, 1, r_out);
    wm.tail_ok = wm.tail <= 0.01 * wm.q1;
    wm.edge_power = std::exp((static_cast<double>(s.exponent(k)) + 1.0) *
                             std::log1p(-std::pow(static_cast<double>(q),
                                                  -static_cast<double>(k))));
    rep.windows.push_back(wm);
    rep.all_positive = rep.all_positive && wm.min_margin > 0.0;
    rep.tails_ok = rep.tails_ok && wm.tail_ok;
  }
  return rep;
}

int minimal_working_q(double alpha, int K, const std::vector<int>& candidates) {
  for (int q : candidates) {
    const LowerBoundReport rep = lacunary_lowerbound_check(alpha, q, K);
    if (rep.all_positive) return q;
  }
  return -1;
}

namespace {

GridSpec scenario_grid() {
  GridSpec g;
  g.directions = 128;
  g.m_lo = 3;
  g.m_hi = 12;
  g.seed = 7;
  return g;
}

ScenarioResult run_stilde(const std::string& id, const SelfMap& phi, int p,
                          bool expect_stilde, bool expect_sstar,
                          std::optional<cdouble> uncovered_witness) {
  ScenarioResult res;
  res.id = id;
  const GridSpec grid = scenario_grid();
  const StildeReport rep = stilde_membership(phi, p, grid);
  std::ostringstream det;
  det << "sup_component=" << fmt(rep.sup_component)
      << " sup_full=" << fmt(rep.sup_full)
      << " min|phi|=" << fmt(rep.min_modulus)
      << " coverage=" << fmt(rep.coverage);
  res.checks.push_back(
      check_bool("stilde_evidence", expect_stilde, rep.stilde, det.str()));
  res.checks.push_back(
      check_bool("sstar_evidence", expect_sstar, rep.sstar, det.str()));
  if (uncovered_witness) {
    const bool covered =
        disc_point_covered(phi, p, *uncovered_witness, 0.05, grid);
    res.checks.push_back(check_bool("witness_point_uncovered", true, !covered,
                                    "target outside the projected image"));
  }
  return res;
}

LacunarySeries example_series(int dim, int p) {
  LacunarySeries s;
  s.dim = dim;
  s.p = p;
  s.q = 10;
  s.alpha = 0.5;
  s.K = 8;
  return s;
}

ScenarioResult run_lacunary_ratio() {
  ScenarioResult res;
  res.id = "lacunary-ratio";
  const LacunarySeries s = example_series(1, 1);
  double worst = 0.0;
  for (int k = 0; k <= s.K; ++k)
    worst = std::max(worst, lacunary_ratio_log_defect(s, k));
  res.checks.push_back(check_le("coefficient_ratio_log_defect", worst, 1e-12));
  return res;
}

ScenarioResult run_lacunary_plus() {
  ScenarioResult res;
  res.id = "lacunary-plus";
  const int n = 2;
  const LacunarySeries s = example_series(2, 1);
  const Symbol psi = lacunary_symbol(s, n - 1);
  const MembershipReport rep =
      membership_class(psi, standard_weight(0.5), n, scenario_grid());
  CheckResult c;
  c.name = "membership_class";
  c.expected = "Plus";
  c.actual = to_string(rep.cls);
  c.pass = rep.cls == MembershipClass::Plus;
  c.detail = "window inf trace last=" + fmt(rep.inf_trace.last());
  res.checks.push_back(c);
  return res;
}

ScenarioResult run_lacunary_lowerbound() {
  ScenarioResult res;
  res.id = "lacunary-lowerbound";
  const LowerBoundReport rep = lacunary_lowerbound_check(0.5, 10, 8);
  res.checks.push_back(check_bool("all_window_margins_positive", true,
                                  rep.all_positive));
  res.checks.push_back(check_bool("truncation_tails_small", true,
                                  rep.tails_ok));
  for (const auto& w : rep.windows) {
    res.checks.push_back(check_le("q1_bound_window" + std::to_string(w.k),
                                  w.q1_bound, w.q1,
                                  "principal term dominates its bound"));
    res.checks.push_back(check_le("q2_bound_window" + std::to_string(w.k),
                                  w.q2, w.q2_bound,
                                  "lower tail below its bound"));
  }
  // (1 - q^-k)^(q^k+1) >= 1/3 spot check at k = 3
  const LowerBoundReport spot = rep;
  for (const auto& w : spot.windows)
    if (w.k == 3)
      res.checks.push_back(check_le("edge_power_k3", 1.0 / 3.0, w.edge_power));
  return res;
}

ScenarioResult run_antiderivative_order() {
  ScenarioResult res;
  res.id = "antiderivative-order";
  const int n = 2;
  const LacunarySeries s = example_series(1, 1);
  const CoordinateSeries base = CoordinateSeries::from_lacunary(s);
  const RadiusWindow win = s.window(3, 0.5);
  const double r = 1.0 - std::sqrt((1.0 - win.lo) * (1.0 - win.hi));
  const Point z{cdouble(r, 0.0)};
  const cdouble rhs = base.radial_eval(1, z) * std::pow(r, n - 1);
  // candidate integration counts: n-1 and n-2
  const double ratio_good =
      std::abs(base.antiderivative(n - 1).radial_eval(n, z) / rhs);
  const double ratio_bad =
      std::abs(base.antiderivative(n - 2).radial_eval(n, z) / rhs);
  res.checks.push_back(check_le("order_n_minus_1_ratio_defect",
                                std::abs(ratio_good - 1.0), 0.1,
                                "ratio=" + fmt(ratio_good)));
  res.checks.push_back(check_le("order_n_minus_2_inconsistent", 10.0,
                                ratio_bad, "ratio=" + fmt(ratio_bad)));
  return res;
}

ScenarioResult run_mobius_identities() {
  ScenarioResult res;
  res.id = "mobius-identities";
  const int N = 3;
  const auto centers = ball_points(N, 32, 0.9, 11);
  const auto points = ball_points(N, 32, 0.95, 12);
  double worst_mod = 0.0, worst_inv = 0.0, worst_fix = 0.0;
  int pairs = 0;
  for (const auto& a : centers)
    for (const auto& z : points) {
      ++pairs;
      const MobiusMap g(a);
      const Point gz = g.apply(z);
      const double lhs = 1.0 - norm_sq(gz);
      const double rhs = (1.0 - norm_sq(a)) * (1.0 - norm_sq(z)) /
                         std::norm(1.0 - herm(z, a));
      worst_mod = std::max(worst_mod,
                           std::abs(lhs - rhs) / std::max(1e-30, std::abs(rhs)));
      worst_inv = std::max(worst_inv, dist(g.apply(gz), z));
      worst_fix = std::max(worst_fix, dist(g.apply(Point(N, 0.0)), a));
      worst_fix = std::max(worst_fix, norm(g.apply(a)));
    }
  res.checks.push_back(check_le("modulus_identity_rel", worst_mod, 1e-12,
                                std::to_string(pairs) + " pairs"));
  res.checks.push_back(check_le("involution_deviation", worst_inv, 1e-10));
  res.checks.push_back(check_le("exchange_of_zero_and_center", worst_fix,
                                1e-12));
  return res;
}

ScenarioResult run_mobius_weight_ratio() {
  ScenarioResult res;
  res.id = "mobius-weight-ratio";
  const int N = 3;
  const RadialWeight nu = standard_weight(1.0);
  const MobiusMap g(coordinate_axis(N, 1, 0.5));
  const auto radii = dyadic_radii(3, 14);
  const WeightRatioTrace tr =
      weight_ratio_trend(nu, g, radii, coordinate_axis(N, 1, 1.0), 1);
  // closed form along this ray: |1 - 0.5 r|^2 / (1 - 0.25)
  double worst = 0.0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double cf = std::norm(1.0 - 0.5 * radii[i]) / 0.75;
    worst = std::max(worst, std::abs(tr.full_ratio[i] - cf));
  }
  res.checks.push_back(check_le("ray_ratio_matches_closed_form", worst, 1e-10));
  res.checks.push_back(check_le("sup_ratio_finite", tr.sup_full, 3.0));
  res.checks.push_back(check_le("limit_value_positive", 1.0 / 3.0 - 1e-3,
                                tr.full_ratio.back(),
                                "ratio tends to 1/3, not to 0"));
  // reflection case: ratio identically 1
  const MobiusMap refl(Point(N, 0.0));
  const WeightRatioTrace tr0 =
      weight_ratio_trend(nu, refl, radii, coordinate_axis(N, 1, 1.0), 1);
  double dev = 0.0;
  for (double v : tr0.full_ratio) dev = std::max(dev, std::abs(v - 1.0));
  res.checks.push_back(check_le("reflection_ratio_one", dev, 1e-14));
  return res;
}

ScenarioResult run_delta_transfer() {
  ScenarioResult res;
  res.id = "delta-transfer";
  const GridSpec grid = scenario_grid();
  auto h_one = [](const Point&) { return 1.0; };

  const SelfMap contraction = SelfMap::scaled_identity(2, 0.5);
  const TransferReport t1 = transfer_check(
      [&](const Point& z) { return contraction.eval(z); }, 2, 1,
      standard_weight(1.0), h_one, 1, grid);
  res.checks.push_back(
      check_le("contraction_ratio", t1.ratio, 1.0 + 1e-9,
               "lhs=" + fmt(t1.lhs_sup) + " M=" + fmt(t1.component_sup)));

  // sample map recentred so it fixes the origin
  const SelfMap phi = sample_map_shifted_affine();
  const MobiusMap recenter(Point{cdouble(-0.5, 0.0), cdouble(0.0, 0.0)});
  const TransferReport t2 = transfer_check(
      [&](const Point& z) { return phi.eval(recenter.apply(z)); }, 2, 1,
      standard_weight(1.0), h_one, 1, grid);
  res.checks.push_back(
      check_le("recentred_affine_ratio", t2.ratio, 2.0,
               "lhs=" + fmt(t2.lhs_sup) + " M=" + fmt(t2.component_sup)));

  const TransferReport t3 = transfer_check(
      [&](const Point& z) { return contraction.eval(z); }, 2, 1,
      standard_weight(2.0), h_one, 2, grid);
  res.checks.push_back(
      check_le("strongly_vanishing_weight_ratio", t3.ratio, 2.0,
               "lhs=" + fmt(t3.lhs_sup) + " M=" + fmt(t3.component_sup)));
  return res;
}

std::vector<MultiPoly> small_corpus(int N) {
  std::vector<MultiPoly> c;
  c.push_back(MultiPoly::coordinate(N, 1));
  c.push_back(MultiPoly::coordinate(N, 2));
  c.push_back(MultiPoly::coordinate(N, 1) * cdouble(0.5, 0.5) +
              MultiPoly::constant(N, 1.0));
  {
    std::vector<int> e(N, 0);
    e[0] = 2;
    c.push_back(MultiPoly::monomial(N, e, 1.0));
  }
  {
    std::vector<int> e(N, 0);
    e[1] = 3;
    c.push_back(MultiPoly::monomial(N, e, cdouble(0.0, 1.0)));
  }
  {
    std::vector<int> e(N, 0);
    e[0] = 1;
    e[1] = 1;
    c.push_back(MultiPoly::monomial(N, e, 2.0) + MultiPoly::coordinate(N, 1));
  }
  return c;
}

ScenarioResult run_automorphism_norm() {
  ScenarioResult res;
  res.id = "automorphism-norm";
  GridSpec grid = scenario_grid();
  grid.directions = 64;
  grid.m_hi = 10;
  const RadialWeight w = standard_weight(1.0);
  const auto corpus = small_corpus(2);

  const MobiusMap refl(Point(2, 0.0));
  const CgammaReport r0 = cgamma_check(refl, w, 1, corpus, grid);
  res.checks.push_back(check_le("reflection_forward_ratio_defect",
                                std::abs(r0.max_forward_ratio - 1.0), 1e-10));
  res.checks.push_back(check_le("reflection_inverse_ratio_defect",
                                std::abs(r0.max_inverse_ratio - 1.0), 1e-10));

  const MobiusMap g(Point{cdouble(0.3, 0.0), cdouble(0.0, 0.0)});
  const CgammaReport r1 = cgamma_check(g, w, 1, corpus, grid);
  res.checks.push_back(check_le("composition_ratio_finite",
                                r1.max_forward_ratio, 50.0));
  res.checks.push_back(check_le("inverse_ratio_finite", r1.max_inverse_ratio,
                                50.0));
  res.checks.push_back(check_le("roundtrip_norm_defect",
                                r1.max_roundtrip_defect, 1e-9));
  return res;
}

ScenarioResult run_nmu_gap_series() {
  ScenarioResult res;
  res.id = "nmu-gap-series";
  const int n = 2;
  const LacunarySeries s = example_series(2, 1);
  const Symbol psi = lacunary_symbol(s, n - 1);
  const SymbolPair pair =
      SymbolPair::from_map(psi, SelfMap::identity(2), 1);
  const ConditionReport rep =
      condition_n_mu(pair, standard_weight(0.5), n, scenario_grid());
  CheckResult c;
  c.name = "psi_membership";
  c.expected = "Plus";
  c.actual = to_string(rep.psi.cls);
  c.pass = rep.psi.cls == MembershipClass::Plus;
  res.checks.push_back(c);
  for (std::size_t j = 0; j < rep.products.size(); ++j)
    res.checks.push_back(check_report(
        "product_membership_j" + std::to_string(j + 1),
        to_string(rep.products[j].cls),
        "weighted top derivative of the product keeps the window lower "
        "bound; see sup trace last=" +
            fmt(rep.products[j].sup_trace.last())));
  res.checks.push_back(check_report("condition_pass",
                                    rep.pass ? "yes" : "no"));
  return res;
}

ScenarioResult run_nmu_rational_factor() {
  ScenarioResult res;
  res.id = "nmu-rational-factor";
  const int n = 2;
  // direct gap series (no antiderivative), wider windows, rational
  // coordinate factor (z_p - a)/(1 - conj(a) z_p)
  LacunarySeries s = example_series(2, 1);
  const Symbol psi = lacunary_symbol(s, 0, 1.5);
  const Symbol phi_p = Symbol::mobius_coordinate(2, 1, cdouble(0.3, 0.0));
  const SymbolPair pair = SymbolPair::component_only(psi, phi_p, 1);
  const ConditionReport rep =
      condition_n_mu(pair, standard_weight(0.5), n, scenario_grid());
  CheckResult c;
  c.name = "psi_membership";
  c.expected = "Plus";
  c.actual = to_string(rep.psi.cls);
  c.pass = rep.psi.cls == MembershipClass::Plus;
  c.detail = "window inf trace last=" + fmt(rep.psi.inf_trace.last());
  res.checks.push_back(c);
  for (std::size_t j = 0; j < rep.products.size(); ++j)
    res.checks.push_back(check_report(
        "product_membership_j" + std::to_string(j + 1),
        to_string(rep.products[j].cls),
        "sup trace last=" + fmt(rep.products[j].sup_trace.last())));
  return res;
}

}  // namespace

const std::vector<Scenario>& scenario_registry() {
  static const std::vector<Scenario> reg = {
      {"stilde-ex1", "affine-shift sample map: component classes on C^2",
       [] {
         return run_stilde("stilde-ex1", sample_map_shifted_affine(), 1, true,
                           false, cdouble(0.0, -0.5));
       }},
      {"stilde-ex2", "square-shift sample map: component classes on C^3",
       [] {
         return run_stilde("stilde-ex2", sample_map_square_shift(), 2, true,
                           false, cdouble(0.0, -0.5));
       }},
      {"stilde-ex3", "diagonal sample map: component classes on C^3",
       [] {
         return run_stilde("stilde-ex3", sample_map_diagonal(), 1, true, false,
                           std::nullopt);
       }},
      {"stilde-identity", "identity map: both classes hold in every coordinate",
       [] {
         return run_stilde("stilde-identity", SelfMap::identity(2), 1, true,
                           true, std::nullopt);
       }},
      {"lacunary-ratio", "gap-series coefficient normalization is exact in logs",
       run_lacunary_ratio},
      {"lacunary-plus", "gap-series antiderivative keeps the Plus class",
       run_lacunary_plus},
      {"lacunary-lowerbound",
       "window margins of the gap-series derivative stay positive",
       run_lacunary_lowerbound},
      {"antiderivative-order",
       "which integration count matches the top-derivative identity",
       run_antiderivative_order},
      {"mobius-identities", "modulus identity, involution, 0 <-> center",
       run_mobius_identities},
      {"mobius-weight-ratio", "weight ratio along a ray against closed form",
       run_mobius_weight_ratio},
      {"delta-transfer", "delta-norm transfer ratios stay bounded",
       run_delta_transfer},
      {"automorphism-norm", "composition with an automorphism has bounded norm ratios",
       run_automorphism_norm},
      {"nmu-gap-series", "membership classes of the gap-series pair",
       run_nmu_gap_series},
      {"nmu-rational-factor",
       "membership classes with a rational coordinate factor",
       run_nmu_rational_factor},
  };
  return reg;
}

std::vector<std::string> scenario_ids() {
  std::vector<std::string> ids;
  for (const auto& s : scenario_registry()) ids.push_back(s.id);
  return ids;
}

ScenarioResult run_scenario(const std::string& id) {
  for (const auto& s : scenario_registry())
    if (s.id == id) return s.run();
  throw std::invalid_argument("unknown scenario id: " + id);
}

}  // namespace wco
