#include "wco/trace.hpp"

#include <algorithm>
#include <cmath>

namespace wco {

double RadialTrace::max_value() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

double RadialTrace::slope() const {
  // least squares of ln(v) against -ln(1-r) over the last 4 positive points
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = values.size(); i-- > 0;) {
    if (values[i] > 0.0 && radii[i] < 1.0) {
      pts.emplace_back(-std::log(1.0 - radii[i]), std::log(values[i]));
      if (pts.size() == 4) break;
    }
  }
  if (pts.size() < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto& [x, y] : pts) {
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double den = n * sxx - sx * sx;
  if (std::abs(den) < 1e-30) return 0.0;
  return (n * sxy - sx * sy) / den;
}

bool RadialTrace::nonincreasing_tail(int window) const {
  const int n = static_cast<int>(values.size());
  for (int i = std::max(1, n - window); i < n; ++i)
    if (values[i] > values[i - 1] * (1.0 + 1e-12) + 1e-300) return false;
  return true;
}

bool RadialTrace::strictly_decreasing_tail(int window) const {
  const int n = static_cast<int>(values.size());
  if (n < 2) return false;
  for (int i = std::max(1, n - window); i < n; ++i)
    if (values[i] >= values[i - 1]) return false;
  return true;
}

bool RadialTrace::increasing_tail(int window) const {
  const int n = static_cast<int>(values.size());
  if (n < 2) return false;
  for (int i = std::max(1, n - window); i < n; ++i)
    if (values[i] < values[i - 1]) return false;
  return true;
}

TrendClass classify_trend(const RadialTrace& t, const Thresholds& th) {
  for (double v : t.values)
    if (!std::isfinite(v)) return TrendClass::Divergent;
  if (t.values.empty()) return TrendClass::Inconclusive;
  if (vanishing_trend(t, th)) return TrendClass::Vanishing;
  const double s = t.slope();
  if (s <= th.slope_bounded) return TrendClass::Bounded;
  if (s >= th.slope_divergent && t.increasing_tail()) return TrendClass::Divergent;
  return TrendClass::Inconclusive;
}

bool vanishing_trend(const RadialTrace& t, const Thresholds& th) {
  if (t.values.empty()) return false;
  if (t.last() <= th.eps_zero && t.nonincreasing_tail()) return true;
  return t.strictly_decreasing_tail() && t.slope() <= th.slope_decay;
}

bool nonvanishing_trend(const RadialTrace& t, const Thresholds& th) {
  if (t.values.empty()) return false;
  return t.last() >= 10.0 * th.eps_zero && t.slope() > th.slope_decay;
}

}  // namespace wco
