#include "wco/mobius.hpp"

#include <cmath>
#include <stdexcept>

#include "wco/sampling.hpp"

namespace wco {

MobiusMap::MobiusMap(Point alpha) : alpha_(std::move(alpha)) {
  alpha_sq_ = norm_sq(alpha_);
  if (alpha_sq_ >= 1.0)
    throw std::domain_error("moebius center must lie in the open ball");
  s_ = std::sqrt(1.0 - alpha_sq_);
}

Point MobiusMap::apply(const Point& z, bool* near_pole) const {
  if (near_pole) *near_pole = false;
  if (alpha_sq_ == 0.0) return scale(z, -1.0);
  const cdouble zw = herm(z, alpha_);
  const cdouble den = 1.0 - zw;
  if (near_pole && std::abs(den) < 1e-12) *near_pole = true;
  const Point P = scale(alpha_, zw / alpha_sq_);
  const Point Q = sub(z, P);
  Point num = sub(sub(alpha_, P), scale(Q, s_));
  return scale(num, 1.0 / den);
}

double MobiusMap::pole_margin(const Point& z) const {
  if (alpha_sq_ == 0.0) return 1.0;
  const double m = std::abs(herm(z, alpha_));
  if (m < 1e-14) return 1.0;
  return std::max(1.0 / m - 1.0, 1e-6);
}

double involution_max_deviation(const MobiusMap& g, int samples, double rmax,
                                std::uint64_t seed) {
  double worst = 0.0;
  for (const Point& z : ball_points(g.dim(), samples, rmax, seed)) {
    const double dev = dist(g.apply(g.apply(z)), z);
    if (dev > worst) worst = dev;
  }
  return worst;
}

SupEstimate radial_derivative_sup(const MobiusMap& g, int k, int directions,
                                  int max_m, std::uint64_t seed) {
  SupEstimate est;
  const int N = g.dim();
  const auto dirs = sphere_directions(N, directions, seed);
  const auto radii = dyadic_radii(1, max_m);
  for (const auto& d : dirs)
    for (double r : radii) {
      const Point z = scale(d, r);
      const double h = std::min(0.05, 0.25 * g.pole_margin(z) / 4.0);
      double sq = 0.0;
      for (int p = 1; p <= N; ++p) {
        const cdouble v = ray_radial_derivative(
            [&](const Point& w) { return g.apply(w)[p - 1]; }, z, k, h);
        sq += std::norm(v);
      }
      const double mag = std::sqrt(sq);
      if (mag > est.sup) {
        est.sup = mag;
        est.argmax = z;
      }
    }
  return est;
}

WeightRatioTrace weight_ratio_trend(const RadialWeight& nu, const MobiusMap& g,
                                    const std::vector<double>& radii,
                                    const Point& direction, int p) {
  WeightRatioTrace tr;
  tr.radii = radii;
  for (double r : radii) {
    const Point z = scale(direction, r / norm(direction));
    const Point gz = g.apply(z);
    const double full = nu(norm(z)) / nu(norm(gz));
    const double coord =
        nu(std::abs(z[p - 1])) / nu(std::abs(gz[p - 1]));
    tr.full_ratio.push_back(full);
    tr.coordinate_ratio.push_back(coord);
    tr.sup_full = std::max(tr.sup_full, full);
    tr.sup_coordinate = std::max(tr.sup_coordinate, coord);
  }
  return tr;
}

ComponentBound component_modulus_bound(const MobiusMap& g, int p,
                                       const Point& z) {
  if (g.is_reflection())
    throw std::domain_error("component bound needs a nonzero center");
  ComponentBound cb;
  const Point& a = g.center();
  const double amod = norm(a);
  const double apmod = std::abs(a[p - 1]);
  cb.a_p_sq = 2.0 * apmod * apmod / (amod * (1.0 + amod));
  cb.a_sq = (1.0 - amod) / (1.0 + amod);
  const cdouble gp = g.apply(z)[p - 1];
  cb.lhs = std::norm(gp);
  // z' realizing gamma(z') = gamma_p(z) e_p, via the involution
  const Point zprime = g.apply(coordinate_axis(g.dim(), p, gp));
  cb.rhs = cb.a_p_sq + cb.a_sq * std::norm(zprime[p - 1]);
  cb.exact_route = 1.0 - (1.0 - norm_sq(a)) * (1.0 - norm_sq(zprime)) /
                             std::norm(1.0 - herm(zprime, a));
  return cb;
}

}  // namespace wco
