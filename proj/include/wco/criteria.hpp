#ifndef WCO_CRITERIA_HPP
#define WCO_CRITERIA_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wco/quantities.hpp"
#include "wco/trace.hpp"

namespace wco {

struct GridSpec {
  int directions = 256;
  int m_lo = 3;
  int m_hi = 14;
  std::uint64_t seed = 12345;
};

enum class Verdict {
  BoundedEvidence,
  DivergentEvidence,
  CompactEvidence,
  NotCompactEvidence,
  Inconclusive
};

std::string to_string(Verdict v);
std::string to_string(TrendClass c);

// Evaluation points per radius; symbols carrying a window policy are
// sampled on their window radii along the distinguished direction, all
// others on the dyadic radii across the full direction set.
struct EvalSet {
  std::vector<double> radii;
  std::vector<std::vector<Point>> points;  // points[i] at radii[i]
};

EvalSet make_eval_set(int N, const std::optional<WindowPolicy>& policy,
                      const GridSpec& grid);

enum class MembershipClass { Plus, Zero, Neither };
std::string to_string(MembershipClass c);

struct MembershipReport {
  MembershipClass cls = MembershipClass::Neither;
  RadialTrace inf_trace;
  RadialTrace sup_trace;
};

// Boundary class of omega(r)|R^(n) f| : Plus when the directional inf
// stays at or above eps_plus over the last three radii, Zero when the
// directional sup decays (vanishing trend), Neither otherwise.
MembershipReport membership_class(const Symbol& f, const RadialWeight& w,
                                  int n, const GridSpec& grid,
                                  const Thresholds& th = {});

struct ConditionReport {
  MembershipReport psi;
  std::vector<MembershipReport> products;  // psi * phi_p^j, j = 1..n
  bool pass = false;
};

// The (n, mu)-condition: psi classifies Plus while every product
// psi * phi_p^j, j = 1..n, classifies Zero.
ConditionReport condition_n_mu(const SymbolPair& pair, const RadialWeight& mu,
                               int n, const GridSpec& grid,
                               const Thresholds& th = {});

struct LambdaScan {
  bool found = false;
  double lambda = 0.0;
  int j = 0;
  std::vector<std::pair<double, RadialTrace>> scans;  // (lambda, inf trace)
};

// Smallest lambda in {0.5, 0.75, 0.9, 0.95, 0.99} whose restricted
// directional-inf trace of mu |B_j^n(psi; phi_p)| over |phi_p(z)| > lambda
// stays at or above eps_plus.
LambdaScan restricted_inf_scan(const SymbolPair& pair, const RadialWeight& mu,
                            int n, int j, const GridSpec& grid,
                            const Thresholds& th = {});

struct CriterionReport {
  std::string id;  // A1 | A2 | C1 | C2
  Verdict verdict = Verdict::Inconclusive;
  std::vector<RadialTrace> traces;
  std::vector<TrendClass> classes;
  double norm_estimate = 0.0;
  std::optional<int> n0;
  std::string hypothesis_note;
  Thresholds thresholds;
};

struct HypothesisMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Boundedness evidence for the map of order n+m into order n: traces of
// mu |B_j^n(psi; phi_p)| ||delta at phi_p(z), order n+m-j|| for j = 0..n,
// plus the norm representative.
CriterionReport boundedness_A1(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               const GridSpec& grid, const Thresholds& th = {});

// Boundedness evidence for the map of order n into order n+m: the j-range
// splits into delta-norm terms (j <= n) and singular-factor terms
// (j = n+k, k = 1..m).
CriterionReport boundedness_A2(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               const GridSpec& grid, const Thresholds& th = {});

// Compactness evidence: restricted sups over {|phi_p(z)| > r} must vanish
// as r -> 1 for j = n0..n+1 where n0 matches the finiteness transition of
// I^k_nu(1).  Throws HypothesisMismatch when no (or an invalid) n0 is
// available.
CriterionReport compactness_C1(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               std::optional<int> n0_user, const GridSpec& grid,
                               const Thresholds& th = {});

// Compactness counterpart of A2; restriction uses the full-map modulus
// when available (restrict_by_full_map), the component otherwise.
CriterionReport compactness_C2(const SymbolPair& pair, const RadialWeight& nu,
                               const RadialWeight& mu, int n, int m,
                               std::optional<int> n0_user, const GridSpec& grid,
                               bool restrict_by_full_map = true,
                               const Thresholds& th = {});

struct StildeReport {
  double sup_component = 0.0;
  double sup_full = 0.0;
  double min_modulus = 1.0;  // distance from 0 to the sampled image
  bool contains_zero = false;
  bool stilde = false;       // sup equality and zero containment
  double coverage = 0.0;     // covered fraction of the coordinate disc mesh
  bool sstar = false;        // coverage above 0.98
};

// Geometric membership evidence for the component classes; also answers
// coverage queries for specific disc points.
StildeReport stilde_membership(const SelfMap& phi, int p,
                               const GridSpec& grid);
bool disc_point_covered(const SelfMap& phi, int p, cdouble target,
                        double cell_radius, const GridSpec& grid);

// Operator probe: ratios sup mu |R^(target_order) psi (f o phi)| / ||f||
// over a polynomial family (coordinate powers z_p^d, d = 1..degrees).
struct ProbeRatios {
  std::vector<int> degrees;
  std::vector<double> ratios;
  double max_ratio = 0.0;
};

ProbeRatios probe_operator_ratios(const SymbolPair& pair,
                                  const RadialWeight& nu,
                                  const RadialWeight& mu, int target_order,
                                  int source_order, int max_degree,
                                  const GridSpec& grid);

}  // namespace wco

#endif  // WCO_CRITERIA_HPP
