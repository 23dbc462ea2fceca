#ifndef WCO_TYPES_HPP
#define WCO_TYPES_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace wco {

using cdouble = std::complex<double>;

// A point of C^N.
using Point = std::vector<cdouble>;

// Hermitian pairing <z, w> = sum_i z_i * conj(w_i).
inline cdouble herm(const Point& z, const Point& w) {
  cdouble s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

inline double norm_sq(const Point& z) {
  double s = 0.0;
  for (const cdouble& c : z) s += std::norm(c);
  return s;
}

inline double norm(const Point& z) { return std::sqrt(norm_sq(z)); }

inline Point scale(const Point& z, cdouble c) {
  Point r = z;
  for (cdouble& x : r) x *= c;
  return r;
}

inline Point add(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Point sub(const Point& a, const Point& b) {
  Point r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

// p is 1-based throughout the public interfaces.
inline Point coordinate_axis(int dim, int p, cdouble c = 1.0) {
  Point r(dim, cdouble(0.0));
  r[p - 1] = c;
  return r;
}

inline double dist(const Point& a, const Point& b) { return norm(sub(a, b)); }

}  // namespace wco

#endif  // WCO_TYPES_HPP
