#include "wco/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wco {

MultiPoly MultiPoly::constant(int dim, cdouble c) {
  MultiPoly p(dim);
  p.add_term(std::vector<int>(dim, 0), c);
  return p;
}

MultiPoly MultiPoly::coordinate(int dim, int p) {
  if (p < 1 || p > dim) throw std::out_of_range("coordinate index");
  std::vector<int> e(dim, 0);
  e[p - 1] = 1;
  return monomial(dim, std::move(e), 1.0);
}

MultiPoly MultiPoly::monomial(int dim, std::vector<int> exponents, cdouble c) {
  if (static_cast<int>(exponents.size()) != dim)
    throw std::invalid_argument("monomial: exponent size != dim");
  MultiPoly p(dim);
  p.add_term(exponents, c);
  return p;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

cdouble MultiPoly::coeff(const std::vector<int>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? cdouble(0.0) : it->second;
}

cdouble MultiPoly::at_zero() const { return coeff(std::vector<int>(dim_, 0)); }

void MultiPoly::add_term(const std::vector<int>& exponents, cdouble c) {
  if (static_cast<int>(exponents.size()) != dim_)
    throw std::invalid_argument("add_term: exponent size != dim");
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    if (c != cdouble(0.0)) terms_.emplace(exponents, c);
    return;
  }
  it->second += c;
  if (it->second == cdouble(0.0)) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dim mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dim mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dim mismatch");
  MultiPoly r(dim_);
  std::vector<int> e(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < dim_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(cdouble c) const {
  MultiPoly r(dim_);
  if (c == cdouble(0.0)) return r;
  for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
  return r;
}

cdouble MultiPoly::eval(const Point& z) const {
  if (static_cast<int>(z.size()) != dim_)
    throw std::invalid_argument("eval: point size != dim");
  cdouble s = 0.0;
  for (const auto& [e, c] : terms_) {
    cdouble t = c;
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= z[i];
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::partial(int p) const {
  if (p < 1 || p > dim_) throw std::out_of_range("partial index");
  MultiPoly r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[p - 1] == 0) continue;
    std::vector<int> d = e;
    d[p - 1] -= 1;
    r.add_term(d, c * static_cast<double>(e[p - 1]));
  }
  return r;
}

MultiPoly MultiPoly::partial(const CoordinateTuple& l) const {
  MultiPoly r = *this;
  for (int p : l.entries) r = r.partial(p);
  return r;
}

MultiPoly MultiPoly::radial(int n) const {
  if (n < 0) throw std::invalid_argument("radial: negative order");
  if (n == 0) return *this;
  MultiPoly r(dim_);
  for (const auto& [e, c] : terms_) {
    double lam = std::accumulate(e.begin(), e.end(), 0);
    if (lam == 0.0) continue;
    double f = 1.0;
    for (int k = 0; k < n; ++k) f *= lam;
    r.terms_.emplace(e, c * f);
  }
  return r;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& phi,
                             std::size_t term_cap) const {
  if (static_cast<int>(phi.size()) != dim_)
    throw std::invalid_argument("compose: component count != dim");
  const int out_dim = phi.empty() ? dim_ : phi[0].dim();
  for (const auto& c : phi)
    if (c.dim() != out_dim) throw std::invalid_argument("compose: mixed dims");

  MultiPoly acc(out_dim);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(out_dim, c);
    for (int i = 0; i < dim_; ++i)
      for (int k = 0; k < e[i]; ++k) {
        t = t * phi[i];
        if (t.term_count() > term_cap)
          throw std::length_error("compose: term cap exceeded");
      }
    acc = acc + t;
    if (acc.term_count() > term_cap)
      throw std::length_error("compose: term cap exceeded");
  }
  return acc;
}

MultiPoly MultiPoly::pow(int k, std::size_t term_cap) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  MultiPoly r = MultiPoly::constant(dim_, 1.0);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) {
      r = r * base;
      if (r.term_count() > term_cap)
        throw std::length_error("pow: term cap exceeded");
    }
    k >>= 1;
    if (k > 0) {
      base = base * base;
      if (base.term_count() > term_cap)
        throw std::length_error("pow: term cap exceeded");
    }
  }
  return r;
}

double max_coeff_diff(const MultiPoly& a, const MultiPoly& b) {
  double m = 0.0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(e)));
  for (const auto& [e, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(e)));
  return m;
}

}  // namespace wco
