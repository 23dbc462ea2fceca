#include "wco/quantities.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wco/sampling.hpp"

namespace wco {

EvalGrid make_eval_grid(int N, int directions, int m_lo, int m_hi,
                        std::uint64_t seed) {
  EvalGrid g;
  g.directions = sphere_directions(N, directions, seed);
  g.radii = dyadic_radii(m_lo, m_hi);
  return g;
}

SymbolPair SymbolPair::from_map(Symbol psi, SelfMap phi, int p) {
  if (psi.dim() != phi.dim())
    throw std::invalid_argument("pair: dimension mismatch");
  if (p < 1 || p > phi.dim()) throw std::out_of_range("pair: coordinate");
  SymbolPair pr;
  pr.phi_p = Symbol(phi.component(p));
  pr.psi = std::move(psi);
  pr.phi = std::move(phi);
  pr.p = p;
  return pr;
}

SymbolPair SymbolPair::component_only(Symbol psi, Symbol phi_p, int p) {
  if (psi.dim() != phi_p.dim())
    throw std::invalid_argument("pair: dimension mismatch");
  SymbolPair pr;
  pr.psi = std::move(psi);
  pr.phi_p = std::move(phi_p);
  pr.p = p;
  return pr;
}

double graded_norm(const Symbol& f, const RadialWeight& w, int n,
                   const EvalGrid& grid) {
  const Point origin(f.dim(), cdouble(0.0));
  double sup = 0.0;
  for (const auto& d : grid.directions)
    for (double r : grid.radii) {
      const Point z = scale(d, r);
      const double v = w(r) * std::abs(f.radial_at(n, z));
      if (v > sup) sup = v;
    }
  return std::abs(f.eval(origin)) + sup;
}

namespace {

// R^(k) phi_l(z) for k = 0..n, all components.
std::vector<std::vector<cdouble>> component_jets(const SelfMap& phi, int n,
                                                 const Point& z) {
  std::vector<std::vector<cdouble>> jets;
  jets.reserve(phi.dim());
  for (int l = 1; l <= phi.dim(); ++l)
    jets.push_back(Symbol(phi.component(l)).radial_jet(n, z));
  return jets;
}

}  // namespace

cdouble radial_compose_at(const MultiPoly& f, const SelfMap& phi, int n,
                          const Point& z) {
  if (f.dim() != phi.dim())
    throw std::invalid_argument("radial_compose_at: dimension mismatch");
  if (n < 0) throw std::invalid_argument("negative order");
  if (n == 0) return f.eval(phi.eval(z));

  const Point w = phi.eval(z);
  const auto jets = component_jets(phi, n, z);

  // partial values at phi(z), memoized on the sorted coordinate tuple
  std::map<std::vector<int>, cdouble> partial_cache;
  auto partial_at = [&](const std::vector<int>& tuple) {
    std::vector<int> key = tuple;
    std::sort(key.begin(), key.end());
    auto it = partial_cache.find(key);
    if (it != partial_cache.end()) return it->second;
    const cdouble v = f.partial(CoordinateTuple{key}).eval(w);
    partial_cache.emplace(std::move(key), v);
    return v;
  };

  cdouble total = 0.0;
  for (int j = 1; j <= n; ++j) {
    const auto K = compositions(n, j);
    if (K.empty()) continue;
    const double inv_jfact = 1.0 / static_cast<double>(factorial(j));
    cdouble layer = 0.0;
    for (const auto& l : coordinate_tuples(j, phi.dim())) {
      const cdouble df = partial_at(l.entries);
      if (df == cdouble(0.0)) continue;
      cdouble ksum = 0.0;
      for (const auto& k : K) {
        cdouble prod = static_cast<double>(multinomial(n, k.parts));
        for (int t = 0; t < j; ++t)
          prod *= jets[l.entries[t] - 1][k.parts[t]];
        ksum += prod;
      }
      layer += df * ksum;
    }
    total += inv_jfact * layer;
  }
  return total;
}

cdouble radial_weighted_compose_at(const Symbol& psi, const MultiPoly& f,
                                   const SelfMap& phi, int n, const Point& z) {
  const auto psi_jet = psi.radial_jet(n, z);
  cdouble s = 0.0;
  for (int i = 0; i <= n; ++i)
    s += static_cast<double>(binomial(n, i)) * psi_jet[n - i] *
         radial_compose_at(f, phi, i, z);
  return s;
}

cdouble frak_B_full(const SelfMap& phi, int i, int j, const Point& z) {
  if (j < 1 || i < j) return 0.0;
  const auto jets = component_jets(phi, i, z);
  // sum over coordinate tuples factorizes: T_k = sum_l R^(k) phi_l(z)
  std::vector<cdouble> T(i + 1, 0.0);
  for (int k = 1; k <= i; ++k)
    for (int l = 0; l < phi.dim(); ++l) T[k] += jets[l][k];
  cdouble s = 0.0;
  for (const auto& k : compositions(i, j)) {
    cdouble prod = static_cast<double>(multinomial(i, k.parts));
    for (int t = 0; t < j; ++t) prod *= T[k.parts[t]];
    s += prod;
  }
  return s;
}

cdouble frak_B_component(const std::vector<cdouble>& phi_p_jet, int i, int j) {
  if (j < 1 || i < j) return 0.0;
  cdouble s = 0.0;
  for (const auto& k : compositions(i, j)) {
    cdouble prod = static_cast<double>(multinomial(i, k.parts));
    for (int t = 0; t < j; ++t) prod *= phi_p_jet[k.parts[t]];
    s += prod;
  }
  return s;
}

cdouble script_B(const SymbolPair& pair, int n, int j, BVariant variant,
                 const Point& z) {
  if (j < 0 || j > n) throw std::out_of_range("script_B: 0 <= j <= n");
  if (j == 0) return pair.psi.radial_at(n, z);
  const auto psi_jet = pair.psi.radial_jet(n, z);
  cdouble s = 0.0;
  if (variant == BVariant::Component) {
    const auto jet = pair.phi_p.radial_jet(n, z);
    for (int i = j; i <= n; ++i)
      s += static_cast<double>(binomial(n, i)) * psi_jet[n - i] *
           frak_B_component(jet, i, j);
  } else {
    if (!pair.phi)
      throw std::invalid_argument("script_B: pair carries no full map");
    for (int i = j; i <= n; ++i)
      s += static_cast<double>(binomial(n, i)) * psi_jet[n - i] *
           frak_B_full(*pair.phi, i, j, z);
  }
  return s;
}

ExpansionTable expansion_table(const SymbolPair& pair, int n, const Point& z) {
  ExpansionTable t;
  t.order = n;
  t.at = z;
  const auto psi_jet = pair.psi.radial_jet(n, z);
  const auto pjet = pair.phi_p.radial_jet(n, z);

  t.frak_component.assign(n + 1, std::vector<cdouble>(n + 1, 0.0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      t.frak_component[i][j] = frak_B_component(pjet, i, j);

  t.script_component.assign(n + 1, 0.0);
  t.script_component[0] = psi_jet[n];
  for (int j = 1; j <= n; ++j) {
    cdouble s = 0.0;
    for (int i = j; i <= n; ++i)
      s += static_cast<double>(binomial(n, i)) * psi_jet[n - i] *
           t.frak_component[i][j];
    t.script_component[j] = s;
  }

  if (pair.phi) {
    t.frak_full.assign(n + 1, std::vector<cdouble>(n + 1, 0.0));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j)
        t.frak_full[i][j] = frak_B_full(*pair.phi, i, j, z);
    t.script_full.assign(n + 1, 0.0);
    t.script_full[0] = psi_jet[n];
    for (int j = 1; j <= n; ++j) {
      cdouble s = 0.0;
      for (int i = j; i <= n; ++i)
        s += static_cast<double>(binomial(n, i)) * psi_jet[n - i] *
             t.frak_full[i][j];
      t.script_full[j] = s;
    }
  }
  return t;
}

MultiPoly apply_operator(const SymbolPair& pair, const MultiPoly& f,
                         std::size_t term_cap) {
  const MultiPoly* psi = pair.psi.poly();
  if (!psi)
    throw std::invalid_argument(
        "apply_operator: exact product needs a polynomial multiplier");
  if (!pair.phi)
    throw std::invalid_argument("apply_operator: pair carries no full map");
  return (*psi) * f.compose(pair.phi->components(), term_cap);
}

cdouble psi_phi_power_radial(const SymbolPair& pair, int n, int j0,
                             const Point& z) {
  if (j0 < 0 || j0 > n) throw std::out_of_range("psi_phi_power_radial: j0");
  const cdouble pv = pair.phi_p.eval(z);
  cdouble s = 0.0;
  cdouble ppow = 1.0;
  for (int i = 0; i <= j0; ++i) {
    s += static_cast<double>(binomial(j0, i)) *
         script_B(pair, n, j0 - i, BVariant::Component, z) * ppow;
    ppow *= pv;
  }
  return s;
}

double partial_bound_ratio(const MultiPoly& f, const RadialWeight& w, int n,
                           const CoordinateTuple& l, const Point& z,
                           double f_norm) {
  const int j = l.order();
  const double val = std::abs(f.partial(l).eval(z));
  const double r = norm(z);
  if (f_norm <= 0.0) return 0.0;
  if (j <= n) {
    return val / (delta_norm(w, n - j, r) * f_norm);
  }
  const int k = j - n;
  double sing = w(r);
  for (int i = 0; i < k; ++i) sing *= (1.0 - r * r);
  return val * sing / f_norm;
}

}  // namespace wco
