#ifndef WCO_QUANTITIES_HPP
#define WCO_QUANTITIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wco/multiindex.hpp"
#include "wco/selfmap.hpp"
#include "wco/symbol.hpp"
#include "wco/types.hpp"
#include "wco/weights.hpp"

namespace wco {

// Shared sampling grid: sup/inf surrogates run over directions x radii.
struct EvalGrid {
  std::vector<Point> directions;
  std::vector<double> radii;
};

EvalGrid make_eval_grid(int N, int directions, int m_lo, int m_hi,
                        std::uint64_t seed);

// Multiplier/self-map pair with a distinguished coordinate.  The full map
// is optional: single-component constructions (rational coordinate
// factors, constants) only carry the component symbol.
struct SymbolPair {
  Symbol psi;
  std::optional<SelfMap> phi;
  Symbol phi_p;
  int p = 1;

  static SymbolPair from_map(Symbol psi, SelfMap phi, int p);
  static SymbolPair component_only(Symbol psi, Symbol phi_p, int p);
  int dim() const { return psi.dim(); }
};

// |f(0)| + max over the grid of omega(|z|) |R^(n) f(z)|.
double graded_norm(const Symbol& f, const RadialWeight& w, int n,
                   const EvalGrid& grid);

// R^(n)(fied phi)(z) by the higher-order chain rule for the radial
// derivative:
//   sum_{j=1..n} (1/j!) sum_{l in L_j} d^j f/dz_l (phi(z))
//       sum_{k in K_{n,j}} C^n_k prod_t R^(k_t) phi_{l_t}(z).
cdouble radial_compose_at(const MultiPoly& f, const SelfMap& phi, int n,
                          const Point& z);

// R^(n)(psi . (f o phi))(z) via the binomial product rule on top of
// radial_compose_at.
cdouble radial_weighted_compose_at(const Symbol& psi, const MultiPoly& f,
                                   const SelfMap& phi, int n, const Point& z);

// frak-B quantities: the full-map form sums over all coordinate tuples,
// the component form keeps a single coordinate (given by its jet).
cdouble frak_B_full(const SelfMap& phi, int i, int j, const Point& z);
cdouble frak_B_component(const std::vector<cdouble>& phi_p_jet, int i, int j);

enum class BVariant { Full, Component };

// script-B: B_j^n(psi; phi_*)(z); j = 0 returns R^(n) psi(z).
cdouble script_B(const SymbolPair& pair, int n, int j, BVariant variant,
                 const Point& z);

// Per-point cache of every frak/script quantity up to order n.
struct ExpansionTable {
  int order = 0;
  Point at;
  // indexed [i][j], 1 <= j <= i <= n (index 0 unused)
  std::vector<std::vector<cdouble>> frak_full;
  std::vector<std::vector<cdouble>> frak_component;
  std::vector<cdouble> script_component;  // j = 0..n
  std::vector<cdouble> script_full;       // j = 0..n, empty without a map
};

ExpansionTable expansion_table(const SymbolPair& pair, int n, const Point& z);

// psi . (f o phi) as an exact polynomial; requires polynomial psi.
MultiPoly apply_operator(const SymbolPair& pair, const MultiPoly& f,
                         std::size_t term_cap = 1000000);

// Expansion route for R^(n)(psi . phi_p^j0): the script-B combination
// sum_{i=0}^{j0} C(j0,i) B^n_{j0-i}(psi; phi_p)(z) phi_p(z)^i.
cdouble psi_phi_power_radial(const SymbolPair& pair, int n, int j0,
                             const Point& z);

// |d^j f / dz_l (z)| divided by the growth-space bound representative:
// delta-norm of order n-j times ||f|| when j <= n, and the singular form
// ||f|| / (omega(z)(1-|z|^2)^k) when j = n+k.
double partial_bound_ratio(const MultiPoly& f, const RadialWeight& w, int n,
                           const CoordinateTuple& l, const Point& z,
                           double f_norm);

}  // namespace wco

#endif  // WCO_QUANTITIES_HPP
