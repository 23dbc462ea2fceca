#include "wco/corpus.hpp"

#include <cmath>

#include "wco/sampling.hpp"

namespace wco {

namespace {

void all_exponents(int N, int max_deg, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out, int used) {
  if (static_cast<int>(cur.size()) == N) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= max_deg; ++e) {
    cur.push_back(e);
    all_exponents(N, max_deg, cur, out, used + e);
    cur.pop_back();
  }
}

}  // namespace

MultiPoly random_poly(int N, int max_deg, std::mt19937_64& rng,
                      double coeff_scale) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::bernoulli_distribution keep(0.5);
  std::vector<std::vector<int>> exps;
  std::vector<int> cur;
  all_exponents(N, max_deg, cur, exps, 0);
  MultiPoly p(N);
  for (const auto& e : exps) {
    const double re = unif(rng), im = unif(rng);  // always draw: stable stream
    if (keep(rng))
      p.add_term(e, coeff_scale * cdouble(re, im));
  }
  if (p.is_zero()) p.add_term(std::vector<int>(N, 0), cdouble(0.5, 0.0));
  return p;
}

SelfMap random_self_map(int N, int max_deg, std::mt19937_64& rng,
                        double target_sup) {
  std::vector<MultiPoly> comps;
  for (int i = 0; i < N; ++i) comps.push_back(random_poly(N, max_deg, rng));
  // sampled boundary sup with a safety factor
  const auto dirs = sphere_directions(N, 128, 17);
  double sup = 0.0;
  for (const auto& d : dirs) {
    double s = 0.0;
    for (const auto& c : comps) s += std::norm(c.eval(d));
    sup = std::max(sup, std::sqrt(s));
  }
  const double scale = target_sup / (1.15 * std::max(sup, 1e-9));
  for (auto& c : comps) c = c * cdouble(scale, 0.0);
  return SelfMap(std::move(comps));
}

std::vector<Point> random_points(int N, int count, double rmax,
                                 std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < count) {
    Point z(N);
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      z[i] = cdouble(gauss(rng), gauss(rng));
      s += std::norm(z[i]);
    }
    if (s < 1e-12) continue;
    const double r = rmax * std::pow(unif(rng), 1.0 / (2.0 * N));
    const double f = r / std::sqrt(s);
    for (auto& c : z) c *= f;
    pts.push_back(z);
  }
  return pts;
}

}  // namespace wco
