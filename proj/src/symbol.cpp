#include "wco/symbol.hpp"

#include <stdexcept>

#include "wco/multiindex.hpp"

namespace wco {

class SymbolImpl {
 public:
  virtual ~SymbolImpl() = default;
  virtual int dim() const = 0;
  virtual std::vector<cdouble> radial_jet(int n, const Point& z) const = 0;
  virtual const MultiPoly* poly() const { return nullptr; }
};

namespace {

class PolySymbol final : public SymbolImpl {
 public:
  explicit PolySymbol(MultiPoly p) : base_(std::move(p)) {}

  int dim() const override { return base_.dim(); }

  std::vector<cdouble> radial_jet(int n, const Point& z) const override {
    std::vector<cdouble> jet(n + 1);
    jet[0] = base_.eval(z);
    // R^i acts diagonally on the stored terms; evaluate term sums directly
    for (int i = 1; i <= n; ++i) {
      cdouble s = 0.0;
      for (const auto& [e, c] : base_.terms()) {
        int deg = 0;
        for (int q : e) deg += q;
        if (deg == 0) continue;
        double f = 1.0;
        for (int k = 0; k < i; ++k) f *= deg;
        cdouble t = c * f;
        for (int q = 0; q < base_.dim(); ++q)
          for (int k = 0; k < e[q]; ++k) t *= z[q];
        s += t;
      }
      jet[i] = s;
    }
    return jet;
  }

  const MultiPoly* poly() const override { return &base_; }

 private:
  MultiPoly base_;
};

class SeriesSymbol final : public SymbolImpl {
 public:
  explicit SeriesSymbol(CoordinateSeries s) : base_(std::move(s)) {}

  int dim() const override { return base_.dim(); }

  std::vector<cdouble> radial_jet(int n, const Point& z) const override {
    std::vector<cdouble> jet(n + 1);
    for (int i = 0; i <= n; ++i) jet[i] = base_.radial_eval(i, z);
    return jet;
  }

 private:
  CoordinateSeries base_;
};

class MobiusCoordSymbol final : public SymbolImpl {
 public:
  MobiusCoordSymbol(int dim, int p, cdouble a) : dim_(dim), p_(p), a_(a) {
    if (std::abs(a) >= 1.0)
      throw std::domain_error("moebius coordinate center must be in the disc");
  }

  int dim() const override { return dim_; }

  // h(x) = (x - a)/(1 - conj(a) x); h^(j)(x) = j! conj(a)^(j-1) (1-|a|^2)
  // / (1 - conj(a) x)^(j+1).  R^i h(x) = sum_j S(i,j) x^j h^(j)(x).
  std::vector<cdouble> radial_jet(int n, const Point& z) const override {
    const cdouble x = z[p_ - 1];
    const cdouble ac = std::conj(a_);
    const cdouble den = 1.0 - ac * x;
    if (std::abs(den) < 1e-14)
      throw std::domain_error("moebius coordinate evaluated at its pole");
    std::vector<cdouble> h(n + 1);
    h[0] = (x - a_) / den;
    cdouble dpow = den * den;  // (1 - conj(a) x)^(j+1)
    cdouble acp = 1.0;         // conj(a)^(j-1)
    double fact = 1.0;
    for (int j = 1; j <= n; ++j) {
      fact *= j;
      h[j] = fact * acp * (1.0 - std::norm(a_)) / dpow;
      dpow *= den;
      acp *= ac;
    }
    std::vector<cdouble> jet(n + 1);
    jet[0] = h[0];
    for (int i = 1; i <= n; ++i) {
      cdouble s = 0.0;
      cdouble xp = 1.0;
      for (int j = 1; j <= i; ++j) {
        xp *= x;
        s += static_cast<double>(stirling2(i, j)) * xp * h[j];
      }
      jet[i] = s;
    }
    return jet;
  }

 private:
  int dim_;
  int p_;
  cdouble a_;
};

class ProductSymbol final : public SymbolImpl {
 public:
  ProductSymbol(std::shared_ptr<const SymbolImpl> a,
                std::shared_ptr<const SymbolImpl> b)
      : a_(std::move(a)), b_(std::move(b)) {
    if (a_->dim() != b_->dim())
      throw std::invalid_argument("product: dimension mismatch");
  }

  int dim() const override { return a_->dim(); }

  std::vector<cdouble> radial_jet(int n, const Point& z) const override {
    const auto ja = a_->radial_jet(n, z);
    const auto jb = b_->radial_jet(n, z);
    std::vector<cdouble> jet(n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
      for (int s = 0; s <= i; ++s)
        jet[i] += static_cast<double>(binomial(i, s)) * ja[s] * jb[i - s];
    return jet;
  }

 private:
  std::shared_ptr<const SymbolImpl> a_;
  std::shared_ptr<const SymbolImpl> b_;
};

}  // namespace

Symbol::Symbol() : Symbol(MultiPoly(1)) {}

Symbol::Symbol(MultiPoly p)
    : impl_(std::make_shared<PolySymbol>(std::move(p))) {}

Symbol::Symbol(CoordinateSeries s)
    : impl_(std::make_shared<SeriesSymbol>(std::move(s))) {}

Symbol::Symbol(std::shared_ptr<const SymbolImpl> impl)
    : impl_(std::move(impl)) {}

Symbol Symbol::constant(int dim, cdouble c) {
  return Symbol(MultiPoly::constant(dim, c));
}

Symbol Symbol::mobius_coordinate(int dim, int p, cdouble a) {
  return Symbol(
      std::shared_ptr<const SymbolImpl>(new MobiusCoordSymbol(dim, p, a)));
}

int Symbol::dim() const { return impl_->dim(); }

cdouble Symbol::eval(const Point& z) const { return impl_->radial_jet(0, z)[0]; }

cdouble Symbol::radial_at(int n, const Point& z) const {
  return impl_->radial_jet(n, z)[n];
}

std::vector<cdouble> Symbol::radial_jet(int n, const Point& z) const {
  return impl_->radial_jet(n, z);
}

cdouble Symbol::at_zero() const { return eval(Point(dim(), cdouble(0.0))); }

const MultiPoly* Symbol::poly() const { return impl_->poly(); }

std::optional<WindowPolicy> Symbol::window_policy() const { return policy_; }

Symbol Symbol::with_window_policy(WindowPolicy wp) const {
  Symbol s = *this;
  s.policy_ = std::move(wp);
  return s;
}

Symbol Symbol::operator*(const Symbol& o) const {
  Symbol s;
  if (poly() && o.poly()) {
    s = Symbol((*poly()) * (*o.poly()));
  } else {
    s = Symbol(std::shared_ptr<const SymbolImpl>(
        new ProductSymbol(impl_, o.impl_)));
  }
  // either factor's policy survives the product
  s.policy_ = policy_ ? policy_ : o.policy_;
  return s;
}

Symbol Symbol::pow(int k) const {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  Symbol r = Symbol::constant(dim(), 1.0);
  r.policy_ = policy_;
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Symbol lacunary_symbol(const LacunarySeries& s, int antiderivative_order,
                       double window_width) {
  CoordinateSeries base = CoordinateSeries::from_lacunary(s);
  if (antiderivative_order > 0)
    base = base.antiderivative(antiderivative_order);
  WindowPolicy wp;
  wp.p = s.p;
  wp.windows = s.windows(window_width);
  return Symbol(std::move(base)).with_window_policy(std::move(wp));
}

}  // namespace wco
