#ifndef WCO_CORPUS_HPP
#define WCO_CORPUS_HPP

#include <random>
#include <vector>

#include "wco/multipoly.hpp"
#include "wco/selfmap.hpp"
#include "wco/types.hpp"

namespace wco {

// Seeded generators for randomized property corpora.  Everything is
// driven by the caller's engine so corpora are reproducible.

// Sparse polynomial with degree <= max_deg, complex coefficients in the
// unit square, roughly half of the candidate terms kept.
MultiPoly random_poly(int N, int max_deg, std::mt19937_64& rng,
                      double coeff_scale = 1.0);

// Polynomial map scaled so its sampled boundary sup is about `target_sup`.
SelfMap random_self_map(int N, int max_deg, std::mt19937_64& rng,
                        double target_sup = 0.8);

std::vector<Point> random_points(int N, int count, double rmax,
                                 std::mt19937_64& rng);

}  // namespace wco

#endif  // WCO_CORPUS_HPP
