#ifndef WCO_SELFMAP_HPP
#define WCO_SELFMAP_HPP

#include <cstdint>
#include <vector>

#include "wco/multipoly.hpp"
#include "wco/types.hpp"

namespace wco {

// Polynomial map phi = (phi_1, ..., phi_N) intended as a self-map of the
// ball; certify() records sampled evidence that |phi| stays below 1.
class SelfMap {
 public:
  explicit SelfMap(std::vector<MultiPoly> components);

  static SelfMap identity(int N);
  static SelfMap scaled_identity(int N, cdouble c);

  int dim() const { return static_cast<int>(components_.size()); }
  const MultiPoly& component(int p) const { return components_[p - 1]; }
  const std::vector<MultiPoly>& components() const { return components_; }

  Point eval(const Point& z) const;
  Point at_zero() const;

 private:
  std::vector<MultiPoly> components_;
};

struct SelfMapEvidence {
  double sup = 0.0;     // max |phi(z)| over the sample
  double margin = 0.0;  // 1 - sup
  bool ok = false;      // margin > 0
};

// Samples |phi| over directions x radii up to 1 - 2^-max_m.
SelfMapEvidence certify_self_map(const SelfMap& phi, int directions = 128,
                                 int max_m = 12, std::uint64_t seed = 1);

}  // namespace wco

#endif  // WCO_SELFMAP_HPP
