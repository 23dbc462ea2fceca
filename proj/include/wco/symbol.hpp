#ifndef WCO_SYMBOL_HPP
#define WCO_SYMBOL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "wco/lacunary.hpp"
#include "wco/multipoly.hpp"
#include "wco/types.hpp"

namespace wco {

// Restriction attached to symbols whose boundary lower bounds only hold on
// particular radii and along the distinguished coordinate direction.
struct WindowPolicy {
  int p = 1;
  std::vector<RadiusWindow> windows;
};

// Pointwise-evaluable holomorphic scalar symbol with exact radial jets:
// radial_jet(n, z)[i] = R^(i) f (z) for i = 0..n.  Products combine jets
// by the Leibniz rule, so mixed polynomial/series/rational symbols stay
// exact at every point.
class SymbolImpl;

class Symbol {
 public:
  Symbol();  // constant 0 in C^1
  explicit Symbol(MultiPoly p);
  explicit Symbol(CoordinateSeries s);
  static Symbol constant(int dim, cdouble c);
  static Symbol one(int dim) { return constant(dim, 1.0); }
  // Coordinate Moebius factor (z_p - a)/(1 - conj(a) z_p).
  static Symbol mobius_coordinate(int dim, int p, cdouble a);

  int dim() const;
  cdouble eval(const Point& z) const;
  cdouble radial_at(int n, const Point& z) const;
  std::vector<cdouble> radial_jet(int n, const Point& z) const;
  cdouble at_zero() const;

  // Polynomial payload when the symbol is exactly a polynomial.
  const MultiPoly* poly() const;

  std::optional<WindowPolicy> window_policy() const;
  Symbol with_window_policy(WindowPolicy wp) const;

  Symbol operator*(const Symbol& o) const;
  Symbol pow(int k) const;

 private:
  explicit Symbol(std::shared_ptr<const SymbolImpl> impl);
  std::shared_ptr<const SymbolImpl> impl_;
  std::optional<WindowPolicy> policy_;
};

// The antiderivative construction used for boundary-extremal symbols: the
// given gap series integrated `order` times in its coordinate, carrying
// the window policy of the source series.
Symbol lacunary_symbol(const LacunarySeries& s, int antiderivative_order,
                       double window_width = 0.5);

}  // namespace wco

#endif  // WCO_SYMBOL_HPP
