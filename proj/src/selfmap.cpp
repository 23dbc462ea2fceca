#include "wco/selfmap.hpp"

#include <stdexcept>

#include "wco/sampling.hpp"

namespace wco {

SelfMap::SelfMap(std::vector<MultiPoly> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("empty self-map");
  const int N = static_cast<int>(components_.size());
  for (const auto& c : components_)
    if (c.dim() != N)
      throw std::invalid_argument("self-map component dimension mismatch");
}

SelfMap SelfMap::identity(int N) { return scaled_identity(N, 1.0); }

SelfMap SelfMap::scaled_identity(int N, cdouble c) {
  std::vector<MultiPoly> comps;
  comps.reserve(N);
  for (int p = 1; p <= N; ++p)
    comps.push_back(MultiPoly::coordinate(N, p) * c);
  return SelfMap(std::move(comps));
}

Point SelfMap::eval(const Point& z) const {
  Point w(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    w[i] = components_[i].eval(z);
  return w;
}

Point SelfMap::at_zero() const {
  Point w(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    w[i] = components_[i].at_zero();
  return w;
}

SelfMapEvidence certify_self_map(const SelfMap& phi, int directions, int max_m,
                                 std::uint64_t seed) {
  SelfMapEvidence ev;
  const auto dirs = sphere_directions(phi.dim(), directions, seed);
  const auto radii = dyadic_radii(1, max_m);
  for (const auto& d : dirs)
    for (double r : radii) {
      const double v = norm(phi.eval(scale(d, r)));
      if (v > ev.sup) ev.sup = v;
    }
  ev.margin = 1.0 - ev.sup;
  ev.ok = ev.margin > 0.0;
  return ev;
}

}  // namespace wco
