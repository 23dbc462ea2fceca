#include "wco/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wco/multiindex.hpp"

namespace wco {

namespace {

// Unique positive root of x^(d+1) = x + 1; generators gamma_i = phi_d^-i.
double harmonious(int d) {
  double x = 2.0;
  for (int i = 0; i < 64; ++i)
    x = std::pow(1.0 + x, 1.0 / (d + 1));
  return x;
}

// Acklam's rational approximation of the inverse normal CDF; ~1e-9 absolute
// accuracy, ample for direction generation.
double inv_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

LowDiscrepancy::LowDiscrepancy(int dim, std::uint64_t skip)
    : dim_(dim), index_(skip) {
  const double phi = harmonious(dim);
  gamma_.resize(dim);
  double g = 1.0;
  for (int i = 0; i < dim; ++i) {
    g /= phi;
    gamma_[i] = g;
  }
}

std::vector<double> LowDiscrepancy::next() {
  ++index_;
  std::vector<double> u(dim_);
  for (int i = 0; i < dim_; ++i) {
    double v = 0.5 + gamma_[i] * static_cast<double>(index_);
    u[i] = v - std::floor(v);
  }
  return u;
}

std::vector<Point> sphere_directions(int N, int count, std::uint64_t seed) {
  std::vector<Point> dirs;
  for (int p = 1; p <= N; ++p) {
    dirs.push_back(coordinate_axis(N, p, 1.0));
    dirs.push_back(coordinate_axis(N, p, -1.0));
  }
  LowDiscrepancy seq(2 * N, seed * 7919ull);
  while (static_cast<int>(dirs.size()) < count) {
    std::vector<double> u = seq.next();
    Point d(N);
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      const double re = inv_normal_cdf(std::clamp(u[2 * i], 1e-12, 1 - 1e-12));
      const double im =
          inv_normal_cdf(std::clamp(u[2 * i + 1], 1e-12, 1 - 1e-12));
      d[i] = cdouble(re, im);
      s += std::norm(d[i]);
    }
    if (s < 1e-12) continue;
    const double inv = 1.0 / std::sqrt(s);
    for (auto& c : d) c *= inv;
    dirs.push_back(d);
    dirs.push_back(scale(d, -1.0));
  }
  return dirs;
}

std::vector<Point> ball_points(int N, int count, double rmax,
                               std::uint64_t seed) {
  std::vector<Point> pts;
  LowDiscrepancy seq(2 * N + 1, seed * 104729ull);
  while (static_cast<int>(pts.size()) < count) {
    std::vector<double> u = seq.next();
    Point d(N);
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
      const double re = inv_normal_cdf(std::clamp(u[2 * i], 1e-12, 1 - 1e-12));
      const double im =
          inv_normal_cdf(std::clamp(u[2 * i + 1], 1e-12, 1 - 1e-12));
      d[i] = cdouble(re, im);
      s += std::norm(d[i]);
    }
    if (s < 1e-12) continue;
    // radius from the 2N-dim volume measure so points fill the ball
    const double r = rmax * std::pow(u[2 * N], 1.0 / (2.0 * N));
    const double inv = r / std::sqrt(s);
    for (auto& c : d) c *= inv;
    pts.push_back(d);
  }
  return pts;
}

std::vector<double> dyadic_radii(int m_lo, int m_hi) {
  std::vector<double> r;
  for (int m = m_lo; m <= m_hi; ++m) r.push_back(1.0 - std::pow(2.0, -m));
  return r;
}

std::vector<double> fd_weights(double x0, const std::vector<double>& x,
                               int m) {
  // B. Fornberg, Math. Comp. 51 (1988); weights for derivatives 0..m at x0.
  const int n = static_cast<int>(x.size()) - 1;
  std::vector<std::vector<std::vector<double>>> delta(
      m + 1, std::vector<std::vector<double>>(
                 n + 1, std::vector<double>(n + 1, 0.0)));
  delta[0][0][0] = 1.0;
  double c1 = 1.0;
  for (int nn = 1; nn <= n; ++nn) {
    double c2 = 1.0;
    for (int nu = 0; nu < nn; ++nu) {
      const double c3 = x[nn] - x[nu];
      c2 *= c3;
      for (int mm = 0; mm <= std::min(nn, m); ++mm)
        delta[mm][nn][nu] =
            ((x[nn] - x0) * delta[mm][nn - 1][nu] -
             (mm > 0 ? mm * delta[mm - 1][nn - 1][nu] : 0.0)) /
            c3;
    }
    for (int mm = 0; mm <= std::min(nn, m); ++mm)
      delta[mm][nn][nn] =
          c1 / c2 *
          ((mm > 0 ? mm * delta[mm - 1][nn - 1][nn - 1] : 0.0) -
           (x[nn - 1] - x0) * delta[mm][nn - 1][nn - 1]);
    c1 = c2;
  }
  std::vector<double> w(n + 1);
  for (int nu = 0; nu <= n; ++nu) w[nu] = delta[m][n][nu];
  return w;
}

namespace {

// g^(j)(1) for j = 1..k via a symmetric 9-point stencil of step h.
std::vector<cdouble> ray_derivatives(const std::function<cdouble(double)>& g,
                                     int k, double h) {
  const int W = 4;
  std::vector<double> nodes(2 * W + 1);
  std::vector<cdouble> vals(2 * W + 1);
  for (int i = -W; i <= W; ++i) {
    nodes[i + W] = 1.0 + i * h;
    vals[i + W] = g(1.0 + i * h);
  }
  std::vector<cdouble> d(k + 1, 0.0);
  for (int j = 1; j <= k; ++j) {
    std::vector<double> w = fd_weights(1.0, nodes, j);
    cdouble s = 0.0;
    for (int i = 0; i <= 2 * W; ++i) s += w[i] * vals[i];
    d[j] = s;
  }
  return d;
}

}  // namespace

cdouble euler_derivative(const std::function<cdouble(double)>& g, int k,
                         double h) {
  if (k == 0) return g(1.0);
  // two stencil widths + Richardson on the leading even error term
  std::vector<cdouble> dh = ray_derivatives(g, k, h);
  std::vector<cdouble> dh2 = ray_derivatives(g, k, h / 2.0);
  cdouble out = 0.0;
  for (int j = 1; j <= k; ++j) {
    const int order = 2 * 4 + 2 - j - (j % 2 == 0 ? 0 : 1);  // stencil order
    const double f = std::pow(2.0, order);
    const cdouble rich = (f * dh2[j] - dh[j]) / (f - 1.0);
    out += static_cast<double>(stirling2(k, j)) * rich;
  }
  return out;
}

cdouble ray_radial_derivative(const std::function<cdouble(const Point&)>& F,
                              const Point& z, int k, double h) {
  return euler_derivative(
      [&](double t) { return F(scale(z, t)); }, k, h);
}

Point compass_minimize(const std::function<double(const Point&)>& f,
                       Point start, double rmax, double initial_step,
                       double tol, int max_iter) {
  const int N = static_cast<int>(start.size());
  Point best = start;
  double fbest = f(best);
  double step = initial_step;
  auto clamp_ball = [&](Point& z) {
    const double r = norm(z);
    if (r > rmax) for (auto& c : z) c *= rmax / r;
  };
  for (int it = 0; it < max_iter && step > tol; ++it) {
    bool improved = false;
    for (int i = 0; i < 2 * N; ++i) {
      for (double sgn : {1.0, -1.0}) {
        Point cand = best;
        cdouble delta = (i % 2 == 0) ? cdouble(sgn * step, 0.0)
                                     : cdouble(0.0, sgn * step);
        cand[i / 2] += delta;
        clamp_ball(cand);
        const double fc = f(cand);
        if (fc < fbest - 1e-18) {
          fbest = fc;
          best = cand;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace wco
