#ifndef WCO_MOBIUS_HPP
#define WCO_MOBIUS_HPP

#include <cstdint>
#include <vector>

#include "wco/types.hpp"
#include "wco/weights.hpp"

namespace wco {

// The involutive ball automorphism exchanging 0 and alpha:
//   gamma_a(z) = (a - P_a(z) - s_a Q_a(z)) / (1 - <z, a>),
// with P_a the projection onto span(a), Q_a = id - P_a, and
// s_a = sqrt(1 - |a|^2); gamma_0(z) = -z.
class MobiusMap {
 public:
  explicit MobiusMap(Point alpha);

  int dim() const { return static_cast<int>(alpha_.size()); }
  const Point& center() const { return alpha_; }
  double s() const { return s_; }
  bool is_reflection() const { return alpha_sq_ == 0.0; }

  // near_pole (optional) is set when |1 - <z, alpha>| < 1e-12.
  Point apply(const Point& z, bool* near_pole = nullptr) const;

  cdouble component(int p, const Point& z) const {
    return apply(z)[p - 1];
  }

  // Smallest distance from t = 1 to the pole of t -> gamma(t z); used to
  // size ray-differencing steps.
  double pole_margin(const Point& z) const;

 private:
  Point alpha_;
  double alpha_sq_;
  double s_;
};

// max |gamma(gamma(z)) - z| over `samples` quasi-random ball points with
// |z| <= rmax.
double involution_max_deviation(const MobiusMap& g, int samples,
                                double rmax = 0.99, std::uint64_t seed = 1);

// Sampled sup over the ball of |R^(k) gamma| (Euclidean norm across the
// components), radial derivatives from ray stencils.
struct SupEstimate {
  double sup = 0.0;
  Point argmax;
};
SupEstimate radial_derivative_sup(const MobiusMap& g, int k, int directions,
                                  int max_m, std::uint64_t seed = 1);

// Trace of nu(z)/nu(gamma(z)) along a ray, with the coordinate-component
// variant nu(z_p)/nu(gamma_p(z)) alongside.
struct WeightRatioTrace {
  std::vector<double> radii;
  std::vector<double> full_ratio;
  std::vector<double> coordinate_ratio;
  double sup_full = 0.0;
  double sup_coordinate = 0.0;
};
WeightRatioTrace weight_ratio_trend(const RadialWeight& nu, const MobiusMap& g,
                                    const std::vector<double>& radii,
                                    const Point& direction, int p);

// Component modulus data at z' = gamma(gamma_p(z) e_p): the candidate
// bound A_p^2 + A^2 |z'_p|^2 alongside the exact value produced by the
// modulus identity 1 - (1-|a|^2)(1-|z'|^2)/|1-<z',a>|^2.  The candidate
// does not dominate |gamma_p(z)|^2 in general; exact_route always equals
// it.  Constants only make sense for alpha != 0.
struct ComponentBound {
  double lhs = 0.0;          // |gamma_p(z)|^2
  double rhs = 0.0;          // A_p^2 + A^2 |z'_p|^2 (candidate)
  double exact_route = 0.0;  // via the modulus identity at z'
  double a_p_sq = 0.0;
  double a_sq = 0.0;
};
ComponentBound component_modulus_bound(const MobiusMap& g, int p,
                                       const Point& z);

}  // namespace wco

#endif  // WCO_MOBIUS_HPP
