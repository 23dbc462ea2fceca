#include "wco/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

// |z_p|^e with integer e up to ~1e12, in log space to avoid under/overflow
// of intermediate powers; phase handled separately.
cdouble complex_int_pow(cdouble z, std::int64_t e) {
  if (e == 0) return 1.0;
  const double m = std::abs(z);
  if (m == 0.0) return 0.0;
  const double log_mag = static_cast<double>(e) * std::log(m);
  if (log_mag < -745.0) return 0.0;  // underflow floor
  const double mag = std::exp(log_mag);
  const double ang = static_cast<double>(e) * std::arg(z);
  return cdouble(mag * std::cos(ang), mag * std::sin(ang));
}

}  // namespace

double LacunarySeries::log_coeff(int k) const {
  return (k * (alpha - 1.0) + alpha / 2.0) * std::log(static_cast<double>(q));
}

double LacunarySeries::coeff(int k) const { return std::exp(log_coeff(k)); }

std::int64_t LacunarySeries::exponent(int k) const {
  std::int64_t e = 1;
  for (int i = 0; i < k; ++i) e *= q;
  return e;
}

RadiusWindow LacunarySeries::window(int k, double width) const {
  RadiusWindow w;
  w.k = k;
  w.lo = 1.0 - std::pow(static_cast<double>(q), -static_cast<double>(k));
  w.hi = 1.0 - std::pow(static_cast<double>(q), -(k + width));
  return w;
}

std::vector<RadiusWindow> LacunarySeries::windows(double width) const {
  std::vector<RadiusWindow> out;
  for (int k = 2; k <= K - 2; ++k) out.push_back(window(k, width));
  return out;
}

CoordinateSeries::CoordinateSeries(int dim, int p, std::vector<Term> terms)
    : dim_(dim), p_(p), terms_(std::move(terms)) {
  if (p_ < 1 || p_ > dim_) throw std::out_of_range("coordinate index");
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (std::size_t i = 1; i < terms_.size(); ++i)
    if (terms_[i].exponent == terms_[i - 1].exponent)
      throw std::invalid_argument("duplicate exponent");
}

CoordinateSeries CoordinateSeries::from_lacunary(const LacunarySeries& s) {
  std::vector<Term> terms;
  terms.reserve(s.K + 1);
  for (int k = 0; k <= s.K; ++k)
    terms.push_back(Term{s.exponent(k), s.coeff(k)});
  return CoordinateSeries(s.dim, s.p, std::move(terms));
}

cdouble CoordinateSeries::eval(const Point& z) const {
  return radial_eval(0, z);
}

cdouble CoordinateSeries::radial_eval(int n, const Point& z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("eval: point size != dim");
  if (norm(z) >= 1.0)
    throw std::domain_error("series evaluation requires |z| < 1");
  const cdouble zp = z[p_ - 1];
  cdouble s = 0.0;
  for (const Term& t : terms_) {
    double f = t.coeff;
    for (int i = 0; i < n; ++i) f *= static_cast<double>(t.exponent);
    s += f * complex_int_pow(zp, t.exponent);
  }
  return s;
}

CoordinateSeries CoordinateSeries::antiderivative(int order) const {
  if (order < 0) throw std::invalid_argument("antiderivative: negative order");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    double c = t.coeff;
    for (int s = 1; s <= order; ++s)
      c /= static_cast<double>(t.exponent + s);
    out.push_back(Term{t.exponent + order, c});
  }
  return CoordinateSeries(dim_, p_, std::move(out));
}

double CoordinateSeries::tail_beyond(std::int64_t cutoff_exponent,
                                     double r) const {
  double s = 0.0;
  for (const Term& t : terms_)
    if (t.exponent > cutoff_exponent)
      s += std::abs(t.coeff) *
           std::exp(static_cast<double>(t.exponent) * std::log(r));
  return s;
}

double lacunary_ratio_log_defect(const LacunarySeries& s, int k) {
  const double lq = std::log(static_cast<double>(s.q));
  const double lhs = s.log_coeff(k) + (1.0 - s.alpha) * k * lq;
  const double rhs = (s.alpha / 2.0) * lq;
  return std::abs(lhs - rhs);
}

double lacunary_tail(const LacunarySeries& s, int radial_order, double r) {
  if (r <= 0.0 || r >= 1.0)
    throw std::domain_error("tail requires 0 < r < 1");
  const double lq = std::log(static_cast<double>(s.q));
  const double lr = std::log(r);
  double tail = 0.0;
  for (int k = s.K + 1; k <= s.K + 40; ++k) {
    // log(a_k n_k^order r^{n_k}) with n_k = q^k computed in logs
    const double log_nk = k * lq;
    const double nk = std::exp(log_nk);
    const double lt = s.log_coeff(k) + radial_order * log_nk + nk * lr;
    if (lt < -745.0) break;
    tail += std::exp(lt);
  }
  return tail;
}

}  // namespace wco
