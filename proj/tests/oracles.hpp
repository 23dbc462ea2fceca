// Test-only oracles, deliberately independent of the library's
// computational routes.
#ifndef WCO_TESTS_ORACLES_HPP
#define WCO_TESTS_ORACLES_HPP

#include <functional>

#include "wco/weights.hpp"

namespace wco_test {

// Literal depth-k nested quadrature of the iterated integral
//   int_0^r int_0^{t_{k-1}} ... int_0^{t_1} dt/omega(t) dt_1 ... dt_{k-1}
// by recursive fixed-order Gauss-Legendre panels; no kernel collapse.
inline double gauss7(const std::function<double(double)>& f, double lo,
                     double hi) {
  static const double xs[7] = {-0.9491079123427585, -0.7415311855993945,
                               -0.4058451513773972, 0.0,
                               0.4058451513773972,  0.7415311855993945,
                               0.9491079123427585};
  static const double ws[7] = {0.1294849661688697, 0.2797053914892766,
                               0.3818300505051189, 0.4179591836734694,
                               0.3818300505051189, 0.2797053914892766,
                               0.1294849661688697};
  const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
  double s = 0.0;
  for (int i = 0; i < 7; ++i) s += ws[i] * f(c + h * xs[i]);
  return s * h;
}

inline double panels(const std::function<double(double)>& f, double lo,
                     double hi, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    s += gauss7(f, lo + (hi - lo) * i / n, lo + (hi - lo) * (i + 1) / n);
  return s;
}

inline double nested_integral_oracle(const wco::RadialWeight& w, int k,
                                     double r, int panels_per_level = 24) {
  if (k == 1)
    return panels([&](double t) { return 1.0 / w(t); }, 0.0, r,
                  panels_per_level * 4);
  return panels(
      [&](double t) {
        return nested_integral_oracle(w, k - 1, t, panels_per_level);
      },
      0.0, r, panels_per_level);
}

}  // namespace wco_test

#endif  // WCO_TESTS_ORACLES_HPP
