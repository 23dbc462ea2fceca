#ifndef WCO_TRACE_HPP
#define WCO_TRACE_HPP

#include <string>
#include <vector>

namespace wco {

// Classification thresholds; sup/lim over an open ball are not decidable
// numerically, so every verdict is graded evidence against these pinned
// constants and reports carry them.
struct Thresholds {
  double slope_bounded = 0.05;   // tail slope at or below: bounded
  double slope_divergent = 0.2;  // tail slope at or above (sustained): divergent
  double slope_decay = -0.05;    // at or below: decaying
  double eps_plus = 1e-3;        // lower-bound floor for the Plus class
  double eps_zero = 1e-4;        // ceiling for the Zero/vanishing classes
  double cauchy = 1e-6;          // Cauchy tolerance for limit detection
};

// Sampled boundary trace of a nonnegative quantity: values[i] is the
// sup (or inf) over directions at radius radii[i].  slope() fits
// d log(value) / d(-log(1-r)) over the last four positive samples, i.e.
// the growth exponent against 1/(1-r).
struct RadialTrace {
  std::string name;
  int quantity_index = -1;  // the j (or n+k) the quantity belongs to
  std::vector<double> radii;
  std::vector<double> values;

  double last() const { return values.empty() ? 0.0 : values.back(); }
  double max_value() const;
  double slope() const;
  bool nonincreasing_tail(int window = 3) const;
  bool strictly_decreasing_tail(int window = 3) const;
  bool increasing_tail(int window = 3) const;
};

enum class TrendClass { Bounded, Divergent, Vanishing, Inconclusive };

// Bounded: finite values with tail slope <= slope_bounded.  Divergent:
// tail slope >= slope_divergent and an increasing tail.  Vanishing
// implies Bounded and is reported by vanishing_trend below.
TrendClass classify_trend(const RadialTrace& t, const Thresholds& th);

// Evidence that the trace tends to zero: tiny nonincreasing tail, or a
// strictly decreasing tail with clearly negative slope.
bool vanishing_trend(const RadialTrace& t, const Thresholds& th);

// Evidence that the trace stays away from zero: last value well above
// eps_zero without a decaying slope.
bool nonvanishing_trend(const RadialTrace& t, const Thresholds& th);

}  // namespace wco

#endif  // WCO_TRACE_HPP
