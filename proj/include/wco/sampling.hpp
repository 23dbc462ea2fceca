#ifndef WCO_SAMPLING_HPP
#define WCO_SAMPLING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "wco/types.hpp"

namespace wco {

// Deterministic low-discrepancy sequence in [0,1)^d (Kronecker sequence
// with the generalized golden-ratio generators); `skip` offsets the start
// so a seed selects a reproducible slice.
class LowDiscrepancy {
 public:
  LowDiscrepancy(int dim, std::uint64_t skip = 0);
  std::vector<double> next();

 private:
  int dim_;
  std::uint64_t index_;
  std::vector<double> gamma_;
};

// Unit directions on the sphere of C^N: the +-coordinate axes followed by
// antipodal pairs of low-discrepancy points pushed through the inverse
// normal map.  Antipodal closure keeps sup estimates symmetric under
// z -> -z.  Result size is 2N + 2*ceil((count-2N)/2) >= count.
std::vector<Point> sphere_directions(int N, int count, std::uint64_t seed);

// Quasi-random points of the ball |z| <= rmax (directions x radii mix).
std::vector<Point> ball_points(int N, int count, double rmax,
                               std::uint64_t seed);

// r_m = 1 - 2^-m for m = m_lo..m_hi.
std::vector<double> dyadic_radii(int m_lo, int m_hi);

// Finite-difference weights on nodes x for the m-th derivative at x0
// (Fornberg's algorithm).
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m);

// k-th power of the Euler operator t d/dt applied to g at t = 1:
// (t d/dt)^k g(1) = sum_j S(k,j) g^(j)(1), with g^(j) from symmetric
// stencils of step h plus one Richardson halving.  For a holomorphic F
// and g(t) = F(t z) this equals R^(k) F(z).
cdouble euler_derivative(const std::function<cdouble(double)>& g, int k,
                         double h = 0.05);

// R^(k) F(z) for a pointwise-evaluable holomorphic map component.
cdouble ray_radial_derivative(const std::function<cdouble(const Point&)>& F,
                              const Point& z, int k, double h = 0.05);

// Derivative-free compass search minimizing a real function over C^N,
// keeping iterates inside |z| <= rmax.
Point compass_minimize(const std::function<double(const Point&)>& f,
                       Point start, double rmax, double initial_step,
                       double tol, int max_iter = 400);

}  // namespace wco

#endif  // WCO_SAMPLING_HPP
