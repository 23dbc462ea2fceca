#include "wco/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace wco {

RadialWeight standard_weight(double alpha) {
  if (alpha <= 0.0) throw std::domain_error("standard weight needs alpha > 0");
  RadialWeight w;
  w.profile = [alpha](double t) { return std::pow(1.0 - t * t, alpha); };
  w.a = alpha / 2.0;
  w.b = 2.0 * alpha;
  // (1+t)^alpha (1-t)^(alpha/2) turns decreasing at t = 1/3; the
  // comparison onset must sit past that point
  w.delta = 0.4;
  w.name = "standard(" + std::to_string(alpha) + ")";
  return w;
}

RadialWeight unit_weight() {
  RadialWeight w;
  w.profile = [](double) { return 1.0; };
  w.a = 0.5;
  w.b = 1.0;
  w.delta = 0.0;
  w.name = "unit";
  return w;
}

RadialWeight tabulated_weight(
    const std::vector<std::pair<double, double>>& table, double a, double b,
    double delta, const std::string& name) {
  if (table.size() < 2) throw std::invalid_argument("table too small");
  std::vector<double> t, y;
  for (const auto& [ti, wi] : table) {
    if (wi <= 0.0) throw std::domain_error("weight values must be positive");
    t.push_back(ti);
    y.push_back(wi);
  }
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] <= t[i - 1]) throw std::invalid_argument("abscissae not increasing");

  // Fritsch-Carlson monotone cubic slopes
  const std::size_t n = t.size();
  std::vector<double> h(n - 1), d(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = t[i + 1] - t[i];
    d[i] = (y[i + 1] - y[i]) / h[i];
  }
  m[0] = d[0];
  m[n - 1] = d[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i)
    m[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      m[i] = m[i + 1] = 0.0;
      continue;
    }
    const double al = m[i] / d[i], be = m[i + 1] / d[i];
    const double s = al * al + be * be;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m[i] = tau * al * d[i];
      m[i + 1] = tau * be * d[i];
    }
  }

  RadialWeight w;
  w.profile = [t, y, m, h](double x) {
    if (x <= t.front()) return y.front();
    if (x >= t.back()) return y.back();
    std::size_t i =
        std::upper_bound(t.begin(), t.end(), x) - t.begin() - 1;
    const double s = (x - t[i]) / h[i];
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    return h00 * y[i] + h10 * h[i] * m[i] + h01 * y[i + 1] + h11 * h[i] * m[i + 1];
  };
  w.a = a;
  w.b = b;
  w.delta = delta;
  w.name = name;
  return w;
}

NormalityReport certify_normal(const RadialWeight& w, int grid_size) {
  if (grid_size < 64) throw std::invalid_argument("grid_size >= 64 required");
  std::vector<double> grid;
  for (int i = 0; i < grid_size; ++i) {
    const double t = w.delta + (1.0 - w.delta) * (i + 0.5) / (grid_size + 1);
    grid.push_back(t);
  }
  for (int m = 1; m <= 16; ++m) {
    const double t = 1.0 - std::pow(2.0, -m);
    if (t >= w.delta) grid.push_back(t);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  auto ratio_a = [&](double t) { return w(t) / std::pow(1.0 - t, w.a); };
  auto ratio_b = [&](double t) { return w(t) / std::pow(1.0 - t, w.b); };

  NormalityReport rep;
  rep.w1_monotone = true;
  rep.w2_monotone = true;
  const double tol = 1e-12;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double t1 = grid[i - 1], t2 = grid[i];
    const double a1 = ratio_a(t1), a2 = ratio_a(t2);
    if (rep.w1_monotone && a2 > a1 * (1.0 + tol) + tol) {
      rep.w1_monotone = false;
      rep.w1_violation = GridViolation{t1, t2, a1, a2};
    }
    const double b1 = ratio_b(t1), b2 = ratio_b(t2);
    if (rep.w2_monotone && b2 < b1 * (1.0 - tol) - tol) {
      rep.w2_monotone = false;
      rep.w2_violation = GridViolation{t1, t2, b1, b2};
    }
  }
  // last-value trend thresholds relative to the grid start
  const double a_first = ratio_a(grid.front()), a_last = ratio_a(grid.back());
  const double b_first = ratio_b(grid.front()), b_last = ratio_b(grid.back());
  rep.w1_limit = a_last <= 0.5 * a_first;
  rep.w2_limit = b_last >= 2.0 * b_first;
  return rep;
}

namespace {

double adaptive_integral(const std::function<double(double)>& f, double lo,
                         double hi, double rel_tol) {
  if (hi <= lo) return 0.0;
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          f, lo, hi, 15, rel_tol, &err);
  if (!(std::isfinite(v)))
    throw std::runtime_error("quadrature: non-finite result");
  if (err > std::max(1e-14, std::abs(v)) * rel_tol * 1e4)
    throw std::runtime_error("integrand too singular at configured tolerance");
  return v;
}

}  // namespace

double nested_integral(const RadialWeight& w, int k, double r) {
  if (k < 1) throw std::invalid_argument("nested_integral: k >= 1");
  if (r < 0.0 || r >= 1.0) throw std::domain_error("radius outside [0,1)");
  if (r == 0.0) return 0.0;
  double fact = 1.0;
  for (int i = 2; i < k; ++i) fact *= i;
  // substitute t = 1 - e^-s: boundary-concentrated weights become smooth
  // exponentials in s, so the adaptive rule converges even close to r = 1
  const double S = -std::log1p(-r);
  const auto f = [&w, k, r, fact](double s) {
    const double es = std::exp(-s);
    const double t = 1.0 - es;
    double kern = 1.0;
    for (int i = 0; i < k - 1; ++i) kern *= (r - t);
    return kern * es / fact / w(t);
  };
  return adaptive_integral(f, 0.0, S, 1e-9);
}

FinitenessReport integral_at_one_finite(const RadialWeight& w, int k) {
  FinitenessReport rep;
  if (k < 0) {
    rep.verdict = Finiteness::Divergent;
    return rep;
  }
  for (int m = 3; m <= 16; ++m) {
    const double r = 1.0 - std::pow(2.0, -m);
    rep.radii.push_back(r);
    rep.values.push_back(k == 0 ? 1.0 / w(r) : nested_integral(w, k, r));
  }
  const std::size_t n = rep.values.size();

  // tail log-slope per unit of -log2(1-r) (one dyadic step)
  {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (std::size_t i = n - 4; i < n; ++i) {
      if (rep.values[i] <= 0.0) continue;
      const double x = static_cast<double>(i);
      const double y = std::log(rep.values[i]);
      sx += x; sy += y; sxx += x * x; sxy += x * y;
      ++cnt;
    }
    if (cnt >= 2)
      rep.slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx) / std::log(2.0);
  }

  // Cauchy test over the last four radii
  bool cauchy = true;
  for (std::size_t i = n - 4; i + 1 < n; ++i)
    if (std::abs(rep.values[i + 1] - rep.values[i]) >
        1e-6 * std::max(1.0, std::abs(rep.values.back())))
      cauchy = false;

  // geometric decay of increments -> convergent with extrapolable limit
  std::vector<double> inc;
  for (std::size_t i = 0; i + 1 < n; ++i)
    inc.push_back(rep.values[i + 1] - rep.values[i]);
  std::vector<double> ratios;
  for (std::size_t i = inc.size() - 4; i + 1 < inc.size(); ++i)
    if (inc[i] > 0.0 && inc[i + 1] > 0.0) ratios.push_back(inc[i + 1] / inc[i]);
  double rho = 1.0;
  if (!ratios.empty()) {
    std::sort(ratios.begin(), ratios.end());
    rho = ratios[ratios.size() / 2];
  } else if (cauchy) {
    rho = 0.0;
  }
  rep.increment_ratio = rho;

  if (cauchy || rho <= 0.9) {
    rep.verdict = Finiteness::Finite;
    const double last_inc = inc.empty() ? 0.0 : inc.back();
    rep.extrapolated =
        rep.values.back() +
        (rho < 1.0 && rho > 0.0 ? last_inc * rho / (1.0 - rho) : 0.0);
  } else if (rep.slope >= 0.2) {
    rep.verdict = Finiteness::Divergent;
  } else {
    rep.verdict = Finiteness::Inconclusive;
  }
  return rep;
}

std::optional<int> first_finite_order(const RadialWeight& w, int kmax,
                                      int kmin) {
  for (int k = std::max(kmin, 0); k <= kmax; ++k)
    if (integral_at_one_finite(w, k).verdict == Finiteness::Finite) return k;
  return std::nullopt;
}

double delta_norm(const RadialWeight& w, int n, double r) {
  if (n <= 0) return 1.0 / w(r);
  return 1.0 + nested_integral(w, n, r);
}

DeltaNormProfile delta_norm_profile(const RadialWeight& w, int n,
                                    const std::vector<double>& radii) {
  DeltaNormProfile p;
  p.order = n;
  for (double r : radii) p.samples.emplace_back(r, delta_norm(w, n, r));
  return p;
}

}  // namespace wco
