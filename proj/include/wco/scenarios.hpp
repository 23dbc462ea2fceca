#ifndef WCO_SCENARIOS_HPP
#define WCO_SCENARIOS_HPP

#include <functional>
#include <string>
#include <vector>

#include "wco/criteria.hpp"
#include "wco/mobius.hpp"

namespace wco {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string detail;
};

struct ScenarioResult {
  std::string id;
  std::vector<CheckResult> checks;
  bool pass() const;
};

struct Scenario {
  std::string id;
  std::string description;
  std::function<ScenarioResult()> run;
};

const std::vector<Scenario>& scenario_registry();
std::vector<std::string> scenario_ids();
// Throws std::invalid_argument for an unknown id.
ScenarioResult run_scenario(const std::string& id);

// Transfer bound: sup_z h(z) ||delta at map(z)|| against
// M = sup_w h(w) ||delta at map_p(w)||, reported as a ratio.
struct TransferReport {
  double lhs_sup = 0.0;
  double component_sup = 0.0;  // M
  double ratio = 0.0;
};
TransferReport transfer_check(const std::function<Point(const Point&)>& map,
                              int N, int p, const RadialWeight& nu,
                              const std::function<double(const Point&)>& h,
                              int j, const GridSpec& grid);

// Norm ratios of the composition with a ball automorphism over a
// polynomial corpus; radial derivatives of the composite via ray stencils.
struct CgammaReport {
  double max_forward_ratio = 0.0;   // ||f o gamma|| / ||f||
  double max_inverse_ratio = 0.0;   // ||f|| / ||f o gamma||
  double max_roundtrip_defect = 0.0;  // | ||f o g o g||/||f|| - 1 |
};
CgammaReport cgamma_check(const MobiusMap& g, const RadialWeight& w, int n,
                          const std::vector<MultiPoly>& corpus,
                          const GridSpec& grid);

// Gap-window lower-bound audit of the first radial derivative of the gap
// series against (1/4)(1-r)^-alpha, with the three-part decomposition
// into the principal term and the lower/upper tails.
struct WindowMargin {
  int k = 0;
  double min_margin = 0.0;   // min over window radii of |R s| - bound
  double q1 = 0.0;           // principal term at the inner edge
  double q1_bound = 0.0;     // (1/3) q^((k+1/2) alpha)
  double q2 = 0.0;           // lower-tail sum at the outer edge
  double q2_bound = 0.0;     // q^((k+1/2) alpha) / (q^alpha - 1)
  double q3 = 0.0;           // upper-tail sum within the truncation
  double tail = 0.0;         // beyond-truncation tail estimate
  bool tail_ok = false;      // tail <= 1% of q1
  double edge_power = 0.0;   // (1 - q^-k)^(q^k + 1)
};

struct LowerBoundReport {
  std::vector<WindowMargin> windows;
  bool all_positive = false;
  bool tails_ok = false;
};

LowerBoundReport lacunary_lowerbound_check(double alpha, int q, int K);

// Smallest candidate q with every window margin positive.
int minimal_working_q(double alpha, int K,
                      const std::vector<int>& candidates);

// Sample maps used by the shipped scenarios.
SelfMap sample_map_shifted_affine();   // (1/2)(z1 + 1/2, z2/2) on C^2
SelfMap sample_map_square_shift();     // (1/5)(3 z1, (3/2) z2^2 + i, z3) on C^3
SelfMap sample_map_diagonal();         // diag rotation-scaling on C^3

}  // namespace wco

#endif  // WCO_SCENARIOS_HPP
