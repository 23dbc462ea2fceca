#ifndef WCO_WEIGHTS_HPP
#define WCO_WEIGHTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wco {

// Radial profile omega(t) on [0,1), positive and continuous, with the
// comparison exponents (a, b) and onset delta used by the normality check:
// omega/(1-t)^a nonincreasing toward 0, omega/(1-t)^b nondecreasing
// toward infinity on [delta, 1).
struct RadialWeight {
  std::function<double(double)> profile;
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;
  std::string name;

  double operator()(double t) const { return profile(t); }
};

RadialWeight standard_weight(double alpha);  // (1-t^2)^alpha
RadialWeight unit_weight();                  // omega == 1 (not normal)
// Monotone-cubic (Fritsch-Carlson) interpolant through (t_i, w_i).
RadialWeight tabulated_weight(const std::vector<std::pair<double, double>>& table,
                              double a, double b, double delta = 0.0,
                              const std::string& name = "tabulated");

struct GridViolation {
  double t1 = 0.0, t2 = 0.0;
  double v1 = 0.0, v2 = 0.0;
};

struct NormalityReport {
  bool w1_monotone = false;   // omega/(1-t)^a nonincreasing on [delta,1)
  bool w1_limit = false;      // trend toward 0
  bool w2_monotone = false;   // omega/(1-t)^b nondecreasing
  bool w2_limit = false;      // trend toward infinity
  std::optional<GridViolation> w1_violation;
  std::optional<GridViolation> w2_violation;
  bool pass() const {
    return w1_monotone && w1_limit && w2_monotone && w2_limit;
  }
};

// Checks both comparisons on a geometric grid 1-2^-m joined with uniform
// points of [delta, 1); grid_size >= 64.
NormalityReport certify_normal(const RadialWeight& w, int grid_size = 256);

// I^k_omega(r): the k-fold iterated integral of 1/omega along [0, r],
// computed through the single-integral collapse
//   I^k(r) = int_0^r (r-t)^(k-1)/(k-1)! / omega(t) dt
// with adaptive Gauss-Kronrod quadrature at relative tolerance 1e-9.
// Throws std::runtime_error when the quadrature cannot reach tolerance.
double nested_integral(const RadialWeight& w, int k, double r);

enum class Finiteness { Finite, Divergent, Inconclusive };

struct FinitenessReport {
  Finiteness verdict = Finiteness::Inconclusive;
  std::vector<double> radii;    // r_m = 1 - 2^-m, m = 3..16
  std::vector<double> values;   // I^k at those radii
  double extrapolated = 0.0;    // limit estimate when Finite
  double slope = 0.0;           // d log(value) / d(-log(1-r)) tail fit
  double increment_ratio = 1.0; // geometric decay rate of the increments
};

// Classifies I^k_omega(1): Finite when the dyadic samples are Cauchy at
// 1e-6 or their increments decay geometrically (ratio <= 0.9, with the
// limit then Richardson-extrapolated); Divergent when the tail log-slope
// is >= 0.2; otherwise Inconclusive.  k = 0 classifies 1/omega(r) itself;
// k < 0 is Divergent by convention.
FinitenessReport integral_at_one_finite(const RadialWeight& w, int k);

// min { k >= kmin : I^k(1) Finite }, scanning up to kmax; returns nullopt
// if never Finite.
std::optional<int> first_finite_order(const RadialWeight& w, int kmax,
                                      int kmin = 0);

// Point-evaluation norm representative: 1/omega(r) for n = 0 (and any
// n < 0 by convention), 1 + I^n_omega(r) for n >= 1.
double delta_norm(const RadialWeight& w, int n, double r);

// Sampled delta-norm profile along the radius.
struct DeltaNormProfile {
  int order = 0;
  std::vector<std::pair<double, double>> samples;  // (r, estimate)
};

DeltaNormProfile delta_norm_profile(const RadialWeight& w, int n,
                                    const std::vector<double>& radii);

}  // namespace wco

#endif  // WCO_WEIGHTS_HPP
