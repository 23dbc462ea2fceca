#include "wco/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "wco/sampling.hpp"

namespace wco {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::BoundedEvidence: return "BoundedEvidence";
    case Verdict::DivergentEvidence: return "DivergentEvidence";
    case Verdict::CompactEvidence: return "CompactEvidence";
    case Verdict::NotCompactEvidence: return "NotCompactEvidence";
    default: return "Inconclusive";
  }
}

std::string to_string(TrendClass c) {
  switch (c) {
    case TrendClass::Bounded: return "Bounded";
    case TrendClass::Divergent: return "Divergent";
    case TrendClass::Vanishing: return "Vanishing";
    default: return "Inconclusive";
  }
}

std::string to_string(MembershipClass c) {
  switch (c) {
    case MembershipClass::Plus: return "Plus";
    case MembershipClass::Zero: return "Zero";
    default: return "Neither";
  }
}

EvalSet make_eval_set(int N, const std::optional<WindowPolicy>& policy,
                      const GridSpec& grid) {
  EvalSet es;
  if (policy && !policy->windows.empty()) {
    // window radii along the distinguished direction only; wide windows
    // can interleave, so sort before building the trace schedule
    const Point dir = coordinate_axis(N, policy->p, 1.0);
    std::vector<double> radii;
    for (const auto& w : policy->windows) {
      const double glo = 1.0 - w.lo;  // distances to the boundary
      const double ghi = 1.0 - w.hi;
      for (double f : {1.0, 0.5, 0.0})
        radii.push_back(
            1.0 - std::exp(std::log(glo) * f + std::log(ghi) * (1.0 - f)));
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    for (double r : radii) {
      es.radii.push_back(r);
      es.points.push_back({scale(dir, r)});
    }
    return es;
  }
  const auto dirs = sphere_directions(N, grid.directions, grid.seed);
  for (double r : dyadic_radii(grid.m_lo, grid.m_hi)) {
    es.radii.push_back(r);
    std::vector<Point> pts;
    pts.reserve(dirs.size());
    for (const auto& d : dirs) pts.push_back(scale(d, r));
    es.points.push_back(std::move(pts));
  }
  return es;
}

MembershipReport membership_class(const Symbol& f, const RadialWeight& w,
                                  int n, const GridSpec& grid,
                                  const Thresholds& th) {
  MembershipReport rep;
  const EvalSet es = make_eval_set(f.dim(), f.window_policy(), grid);
  rep.inf_trace.name = "inf";
  rep.sup_trace.name = "sup";
  for (std::size_t i = 0; i < es.radii.size(); ++i) {
    const double r = es.radii[i];
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const Point& z : es.points[i]) {
      const double v = w(r) * std::abs(f.radial_at(n, z));
      if (first) {
        lo = hi = v;
        first = false;
      } else {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
    }
    rep.inf_trace.radii.push_back(r);
    rep.inf_trace.values.push_back(lo);
    rep.sup_trace.radii.push_back(r);
    rep.sup_trace.values.push_back(hi);
  }
  const auto& iv = rep.inf_trace.values;
  bool plus = iv.size() >= 3;
  for (std::size_t i = iv.size() >= 3 ? iv.size() - 3 : 0; i < iv.size(); ++i)
    plus = plus && iv[i] >= th.eps_plus;
  // staying above the floor is not enough if the trace clearly decays
  plus = plus && !vanishing_trend(rep.inf_trace, th);
  if (plus)
    rep.cls = MembershipClass::Plus;
  else if (vanishing_trend(rep.sup_trace, th))
    rep.cls = MembershipClass::Zero;
  else
    rep.cls = MembershipClass::Neither;
  return rep;
}

ConditionReport condition_n_mu(const SymbolPair& pair, const RadialWeight& mu,
                               int n, const GridSpec& grid,
                               const Thresholds& th) {
  ConditionReport rep;
  rep.psi = membership_class(pair.psi, mu, n, grid, th);
  rep.pass = rep.psi.cls == MembershipClass::Plus;
  for (int j = 1; j <= n; ++j) {
    Symbol prod = pair.psi * pair.phi_p.pow(j);
    rep.products.push_back(membership_class(prod, mu, n, grid, th));
    rep.pass = rep.pass && rep.products.back().cls == MembershipClass::Zero;
  }
  return rep;
}

LambdaScan restricted_inf_scan(const SymbolPair& pair, const RadialWeight& mu,
                            int n, int j, const GridSpec& grid,
                            const Thresholds& th) {
  LambdaScan out;
  out.j = j;
  const EvalSet es =
      make_eval_set(pair.dim(), pair.psi.window_policy(), grid);
  for (double lambda : {0.5, 0.75, 0.9, 0.95, 0.99}) {
    RadialTrace tr;
    tr.name = "inf|lambda=" + std::to_string(lambda);
    for (std::size_t i = 0; i < es.radii.size(); ++i) {
      double lo = 0.0;
      bool any = false;
      for (const Point& z : es.points[i]) {
        if (std::abs(pair.phi_p.eval(z)) <= lambda) continue;
        const double v =
            mu(es.radii[i]) *
            std::abs(script_B(pair, n, j, BVariant::Component, z));
        lo = any ? std::min(lo, v) : v;
        any = true;
      }
      if (!any) continue;  // empty restriction at this radius
      tr.radii.push_back(es.radii[i]);
      tr.values.push_back(lo);
    }
    const auto& v = tr.values;
    bool ok = v.size() >= 3;
    for (std::size_t i = v.size() >= 3 ? v.size() - 3 : 0; i < v.size(); ++i)
      ok = ok && v[i] >= th.eps_plus;
    ok = ok && !vanishing_trend(tr, th);
    out.scans.emplace_back(lambda, std::move(tr));
    if (ok && !out.found) {
      out.found = true;
      out.lambda = lambda;
    }
  }
  return out;
}

namespace {

std::string condition_note(const SymbolPair& pair, const RadialWeight& mu,
                           int order, const GridSpec& grid,
                           const Thresholds& th) {
  const ConditionReport c = condition_n_mu(pair, mu, order, grid, th);
  std::string note = "(n,mu)-condition[";
  note += std::to_string(order);
  note += "]: ";
  note += c.pass ? "pass" : "fail";
  note += " (psi=" + to_string(c.psi.cls);
  for (std::size_t j = 0; j < c.products.size(); ++j)
    note += ",j" + std::to_string(j + 1) + "=" + to_string(c.products[j].cls);
  note += ")";
  return note;
}

Verdict boundedness_verdict(const std::vector<TrendClass>& classes) {
  bool all_bounded = true;
  for (TrendClass c : classes) {
    if (c == TrendClass::Divergent) return Verdict::DivergentEvidence;
    if (c != TrendClass::Bounded && c != TrendClass::Vanishing)
      all_bounded = false;
  }
  return all_bounded ? Verdict::BoundedEvidence : Verdict::Inconclusive;
}

Verdict compactness_verdict(const std::vector<RadialTrace>& traces,
                            const Thresholds& th) {
  bool all_vanish = true;
  for (const auto& t : traces) {
    if (nonvanishing_trend(t, th)) return Verdict::NotCompactEvidence;
    if (!vanishing_trend(t, th)) all_vanish = false;
  }
  return all_vanish ? Verdict::CompactEvidence : Verdict::Inconclusive;
}

// Finiteness pattern I^(total-n0+1)(1) finite, I^(total-n0)(1) not finite.
std::optional<int> resolve_n0(const RadialWeight& nu, int total, int n,
                              std::optional<int> n0_user) {
  auto finite = [&](int k) {
    return integral_at_one_finite(nu, k).verdict == Finiteness::Finite;
  };
  auto matches = [&](int n0) {
    return finite(total - n0 + 1) && !finite(total - n0);
  };
  if (n0_user) {
    if (*n0_user < 0 || *n0_user > n + 1 || !matches(*n0_user))
      return std::nullopt;
    return n0_user;
  }
  for (int n0 = 0; n0 <= n + 1; ++n0)
    if (matches(n0)) return n0;
  return std::nullopt;
}

}  // namespace

CriterionReport boundedness_A1(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               const GridSpec& grid, const Thresholds& th) {
  CriterionReport rep;
  rep.id = "A1";
  rep.thresholds = th;
  rep.hypothesis_note = condition_note(pair, mu, n, grid, th);

  const EvalSet es = make_eval_set(pair.dim(), pair.psi.window_policy(), grid);
  rep.traces.assign(n + 1, RadialTrace{});
  for (int j = 0; j <= n; ++j) {
    rep.traces[j].name = "B" + std::to_string(j) + "_of_" + std::to_string(n);
    rep.traces[j].radii = es.radii;
    rep.traces[j].values.assign(es.radii.size(), 0.0);
  }
  for (std::size_t i = 0; i < es.radii.size(); ++i) {
    for (const Point& z : es.points[i]) {
      const ExpansionTable t = expansion_table(pair, n, z);
      const double pz = std::abs(pair.phi_p.eval(z));
      for (int j = 0; j <= n; ++j) {
        const double q = mu(es.radii[i]) * std::abs(t.script_component[j]) *
                         delta_norm(nu, n + m - j, pz);
        rep.traces[j].values[i] = std::max(rep.traces[j].values[i], q);
      }
    }
  }
  for (const auto& t : rep.traces) rep.classes.push_back(classify_trend(t, th));
  rep.verdict = boundedness_verdict(rep.classes);

  const double phi0 = pair.phi ? norm(pair.phi->at_zero())
                               : std::abs(pair.phi_p.at_zero());
  rep.norm_estimate = std::abs(pair.psi.at_zero()) * delta_norm(nu, n + m, phi0);
  for (const auto& t : rep.traces) rep.norm_estimate += t.max_value();
  return rep;
}

CriterionReport boundedness_A2(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               const GridSpec& grid, const Thresholds& th) {
  CriterionReport rep;
  rep.id = "A2";
  rep.thresholds = th;
  rep.hypothesis_note = condition_note(pair, mu, n + m, grid, th);

  const int order = n + m;
  const EvalSet es = make_eval_set(pair.dim(), pair.psi.window_policy(), grid);
  rep.traces.assign(order + 1, RadialTrace{});
  for (int j = 0; j <= order; ++j) {
    rep.traces[j].name =
        (j <= n ? "B" : "Bsing") + std::to_string(j) + "_of_" +
        std::to_string(order);
    rep.traces[j].radii = es.radii;
    rep.traces[j].values.assign(es.radii.size(), 0.0);
  }
  for (std::size_t i = 0; i < es.radii.size(); ++i) {
    for (const Point& z : es.points[i]) {
      const ExpansionTable t = expansion_table(pair, order, z);
      const double pz = std::abs(pair.phi_p.eval(z));
      for (int j = 0; j <= n; ++j) {
        const double q = mu(es.radii[i]) * std::abs(t.script_component[j]) *
                         delta_norm(nu, n - j, pz);
        rep.traces[j].values[i] = std::max(rep.traces[j].values[i], q);
      }
      for (int k = 1; k <= m; ++k) {
        double sing = nu(pz);
        for (int s = 0; s < k; ++s) sing *= (1.0 - pz * pz);
        const double q = mu(es.radii[i]) *
                         std::abs(t.script_component[n + k]) / sing;
        rep.traces[n + k].values[i] = std::max(rep.traces[n + k].values[i], q);
      }
    }
  }
  for (const auto& t : rep.traces) rep.classes.push_back(classify_trend(t, th));
  rep.verdict = boundedness_verdict(rep.classes);

  rep.norm_estimate = std::abs(pair.psi.at_zero()) *
                      delta_norm(nu, n, std::abs(pair.phi_p.at_zero()));
  for (const auto& t : rep.traces) rep.norm_estimate += t.max_value();
  return rep;
}

namespace {

CriterionReport compactness_common(const SymbolPair& pair,
                                   const RadialWeight& nu,
                                   const RadialWeight& mu, int n, int m,
                                   std::optional<int> n0_user,
                                   const GridSpec& grid, bool variant_c2,
                                   bool restrict_by_full_map,
                                   const Thresholds& th) {
  CriterionReport rep;
  rep.id = variant_c2 ? "C2" : "C1";
  rep.thresholds = th;
  const int total = variant_c2 ? n : n + m;  // finiteness pattern base
  rep.n0 = resolve_n0(nu, total, n, n0_user);
  if (!rep.n0)
    throw HypothesisMismatch(
        std::string(variant_c2 ? "C2" : "C1") +
        ": no admissible n0 matches the finiteness pattern of the source "
        "weight");
  rep.hypothesis_note =
      "n0=" + std::to_string(*rep.n0) + "; " +
      condition_note(pair, mu, variant_c2 ? n + m : n, grid, th);

  const int order = variant_c2 ? n + m : n;
  const EvalSet es = make_eval_set(pair.dim(), pair.psi.window_policy(), grid);

  // quantity list: (label, j) built per variant
  struct Quantity {
    std::string label;
    int j = 0;
    bool singular = false;
    int k = 0;
  };
  std::vector<Quantity> qs;
  if (!variant_c2) {
    for (int j = *rep.n0; j <= n + 1; ++j)
      qs.push_back({"restricted_B" + std::to_string(j), j, false, 0});
  } else {
    for (int j = 0; j <= n; ++j)
      qs.push_back({"restricted_B" + std::to_string(j), j, false, 0});
    for (int k = 1; k <= m; ++k)
      qs.push_back({"restricted_Bsing" + std::to_string(n + k), n + k, true, k});
  }

  // sample pool: gate modulus and quantity values
  std::vector<double> gates;
  std::vector<std::vector<double>> values(qs.size());
  const bool gate_full = variant_c2 && restrict_by_full_map && pair.phi;
  for (std::size_t i = 0; i < es.radii.size(); ++i) {
    for (const Point& z : es.points[i]) {
      const ExpansionTable t = expansion_table(pair, order, z);
      const double pz = std::abs(pair.phi_p.eval(z));
      const double gate = gate_full ? norm(pair.phi->eval(z)) : pz;
      gates.push_back(gate);
      for (std::size_t qi = 0; qi < qs.size(); ++qi) {
        const auto& q = qs[qi];
        double v = 0.0;
        if (q.singular) {
          double sing = nu(pz);
          for (int s = 0; s < q.k; ++s) sing *= (1.0 - pz * pz);
          v = mu(es.radii[i]) * std::abs(t.script_component[q.j]) / sing;
        } else {
          const cdouble b =
              q.j <= order ? t.script_component[q.j] : cdouble(0.0);
          v = mu(es.radii[i]) * std::abs(b) *
              delta_norm(nu, (variant_c2 ? n : n + m) - q.j, pz);
        }
        values[qi].push_back(v);
      }
    }
  }

  // restricted sup traces; thresholds stop one shell short of the deepest
  // samples so each restriction set keeps genuinely deeper points
  std::vector<double> thresholds = es.radii;
  if (thresholds.size() > 1) thresholds.pop_back();
  for (std::size_t qi = 0; qi < qs.size(); ++qi) {
    RadialTrace tr;
    tr.name = qs[qi].label;
    for (double r : thresholds) {
      double sup = 0.0;
      for (std::size_t s = 0; s < gates.size(); ++s)
        if (gates[s] > r) sup = std::max(sup, values[qi][s]);
      tr.radii.push_back(r);
      tr.values.push_back(sup);
    }
    rep.traces.push_back(std::move(tr));
  }
  for (const auto& t : rep.traces) rep.classes.push_back(classify_trend(t, th));
  rep.verdict = compactness_verdict(rep.traces, th);
  return rep;
}

}  // namespace

CriterionReport compactness_C1(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               std::optional<int> n0_user, const GridSpec& grid,
                               const Thresholds& th) {
  return compactness_common(pair, nu, mu, n, m, n0_user, grid, false, false,
                            th);
}

CriterionReport compactness_C2(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               std::optional<int> n0_user, const GridSpec& grid,
                               bool restrict_by_full_map, const Thresholds& th) {
  return compactness_common(pair, nu, mu, n, m, n0_user, grid, true,
                            restrict_by_full_map, th);
}

StildeReport stilde_membership(const SelfMap& phi, int p,
                               const GridSpec& grid) {
  StildeReport rep;
  const int N = phi.dim();

  std::vector<Point> samples;
  const auto dirs = sphere_directions(N, grid.directions, grid.seed);
  for (const auto& d : dirs)
    for (double r : dyadic_radii(grid.m_lo, grid.m_hi))
      samples.push_back(scale(d, r));
  for (const auto& z : ball_points(N, 8192, 0.999, grid.seed + 1))
    samples.push_back(z);
  // coordinate-disc probes guarantee angular resolution in coordinate p
  const int RB = 16, AB = 32;
  for (int ri = 0; ri < RB; ++ri)
    for (int ai = 0; ai < AB; ++ai) {
      const double r = (ri + 0.5) / RB;
      const double th_ = 2.0 * M_PI * (ai + 0.5) / AB;
      samples.push_back(
          coordinate_axis(N, p, r * cdouble(std::cos(th_), std::sin(th_))));
    }

  Point best = samples.front();
  double best_mod = 1e300;
  std::vector<bool> hit(RB * AB, false);
  for (const auto& z : samples) {
    const Point w = phi.eval(z);
    const double full = norm(w);
    const cdouble comp = w[p - 1];
    rep.sup_full = std::max(rep.sup_full, full);
    rep.sup_component = std::max(rep.sup_component, std::abs(comp));
    if (full < best_mod) {
      best_mod = full;
      best = z;
    }
    const double cr = std::abs(comp);
    if (cr < 1.0) {
      const int ri = std::min(RB - 1, static_cast<int>(cr * RB));
      int ai = static_cast<int>(std::floor((std::arg(comp) + M_PI) /
                                           (2.0 * M_PI) * AB));
      ai = std::clamp(ai, 0, AB - 1);
      hit[ri * AB + ai] = true;
    }
  }

  const Point zmin = compass_minimize(
      [&](const Point& z) { return norm_sq(phi.eval(z)); }, best, 0.999, 0.1,
      1e-7);
  rep.min_modulus = norm(phi.eval(zmin));
  rep.contains_zero = rep.min_modulus <= 1e-3;
  rep.stilde = rep.contains_zero &&
               std::abs(rep.sup_component - rep.sup_full) <= 1e-3;

  int covered = 0;
  for (bool h : hit) covered += h ? 1 : 0;
  rep.coverage = static_cast<double>(covered) / (RB * AB);
  rep.sstar = rep.coverage >= 0.98;
  return rep;
}

bool disc_point_covered(const SelfMap& phi, int p, cdouble target,
                        double cell_radius, const GridSpec& grid) {
  const int N = phi.dim();
  std::vector<Point> samples;
  const auto dirs = sphere_directions(N, grid.directions, grid.seed);
  for (const auto& d : dirs)
    for (double r : dyadic_radii(grid.m_lo, grid.m_hi))
      samples.push_back(scale(d, r));
  for (const auto& z : ball_points(N, 16384, 0.999, grid.seed + 2))
    samples.push_back(z);
  double best = 1e300;
  Point argbest = samples.front();
  for (const auto& z : samples) {
    const double d = std::abs(phi.eval(z)[p - 1] - target);
    if (d < best) {
      best = d;
      argbest = z;
    }
  }
  // local refinement of the distance
  const Point zmin = compass_minimize(
      [&](const Point& z) { return std::abs(phi.eval(z)[p - 1] - target); },
      argbest, 0.9999, 0.05, 1e-8);
  best = std::min(best, std::abs(phi.eval(zmin)[p - 1] - target));
  return best <= cell_radius;
}

ProbeRatios probe_operator_ratios(const SymbolPair& pair,
                                  const RadialWeight& nu,
                                  const RadialWeight& mu, int target_order,
                                  int source_order, int max_degree,
                                  const GridSpec& grid) {
  if (!pair.phi)
    throw std::invalid_argument("probe: pair carries no full map");
  ProbeRatios out;
  const int N = pair.dim();
  const EvalGrid eg =
      make_eval_grid(N, grid.directions, grid.m_lo, grid.m_hi, grid.seed);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<int> e(N, 0);
    e[pair.p - 1] = d;
    const MultiPoly f = MultiPoly::monomial(N, e, 1.0);
    const double fnorm = graded_norm(Symbol(f), nu, source_order, eg);
    double sup = 0.0;
    for (const auto& dir : eg.directions)
      for (double r : eg.radii) {
        const Point z = scale(dir, r);
        const double v =
            mu(r) * std::abs(radial_weighted_compose_at(pair.psi, f,
                                                        *pair.phi,
                                                        target_order, z));
        sup = std::max(sup, v);
      }
    const double wnorm =
        std::abs(pair.psi.at_zero() * f.eval(pair.phi->at_zero())) + sup;
    out.degrees.push_back(d);
    out.ratios.push_back(fnorm > 0.0 ? wnorm / fnorm : 0.0);
    out.max_ratio = std::max(out.max_ratio, out.ratios.back());
  }
  return out;
}

}  // namespace wco
