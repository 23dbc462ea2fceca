#ifndef WCO_LACUNARY_HPP
#define WCO_LACUNARY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wco/types.hpp"

namespace wco {

// Radius window [lo, hi] attached to a gap series; lower-bound behavior of
// such series is only meaningful for radii inside these windows.
struct RadiusWindow {
  int k = 0;
  double lo = 0.0;
  double hi = 0.0;
};

// Truncated gap series in one coordinate: sum_{k<=K} a_k z_p^{n_k} with
// a_k = q^{k(alpha-1)+alpha/2} and n_k = q^k.
struct LacunarySeries {
  int dim = 1;
  int p = 1;        // distinguished coordinate, 1-based
  int q = 10;       // gap ratio, integer >= 2
  double alpha = 0.5;  // in (0, 1)
  int K = 8;        // truncation index (terms k = 0..K)

  double log_coeff(int k) const;        // ln a_k
  double coeff(int k) const;            // a_k
  std::int64_t exponent(int k) const;   // n_k = q^k

  // Radii with 1 - q^{-k} <= r <= 1 - q^{-(k+width)}; width is 1/2 for the
  // first-order construction and 3/2 for the higher-order one.
  RadiusWindow window(int k, double width = 0.5) const;
  std::vector<RadiusWindow> windows(double width = 0.5) const;
};

// General sparse one-coordinate power series with real coefficients,
// closed under term-wise integration and radial differentiation.
class CoordinateSeries {
 public:
  struct Term {
    std::int64_t exponent;
    double coeff;
  };

  CoordinateSeries(int dim, int p, std::vector<Term> terms);
  static CoordinateSeries from_lacunary(const LacunarySeries& s);

  int dim() const { return dim_; }
  int coordinate() const { return p_; }
  const std::vector<Term>& terms() const { return terms_; }

  // Term-wise sum at z; domain error outside the open ball.
  cdouble eval(const Point& z) const;

  // R^n applied term-wise (coefficient * exponent^n); n = 0 is eval.
  cdouble radial_eval(int n, const Point& z) const;

  // One-coordinate repeated antiderivative: c z^m -> c/((m+1)...(m+order))
  // z^(m+order).
  CoordinateSeries antiderivative(int order) const;

  // Tail mass sum_{terms beyond the kept ones is not represented}; this
  // reports sum over stored terms with exponent > cutoff of |c| r^e, used
  // for truncation-error accounting against an untruncated ideal.
  double tail_beyond(std::int64_t cutoff_exponent, double r) const;

 private:
  int dim_;
  int p_;
  std::vector<Term> terms_;  // strictly increasing exponents
};

// |a_k n_k^{1-alpha} - q^{alpha/2}| measured in natural logs; zero for the
// exact construction.
double lacunary_ratio_log_defect(const LacunarySeries& s, int k);

// Untruncated-tail estimate for sum_{k>K} a_k n_k^{order} r^{n_k} extended
// 40 indices past K (terms decay super-geometrically inside the ball).
double lacunary_tail(const LacunarySeries& s, int radial_order, double r);

}  // namespace wco

#endif  // WCO_LACUNARY_HPP
