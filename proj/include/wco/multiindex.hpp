#ifndef WCO_MULTIINDEX_HPP
#define WCO_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

namespace wco {

// Tuples of small integers.  A Composition has all parts >= 1, a
// WeakComposition allows zeros, a CoordinateTuple has entries in 1..N.
// Enumeration order is lexicographic so results are deterministic.
struct Composition {
  std::vector<int> parts;
  int order() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool operator==(const Composition&) const = default;
};

struct WeakComposition {
  std::vector<int> parts;
  int order() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool operator==(const WeakComposition&) const = default;
};

struct CoordinateTuple {
  std::vector<int> entries;  // each in 1..N
  int order() const { return static_cast<int>(entries.size()); }
  bool operator==(const CoordinateTuple&) const = default;
};

// All j-tuples of positive integers summing to i; empty when i < j.
std::vector<Composition> compositions(int i, int j);

// All j-tuples of nonnegative integers summing to i; C(i+j-1, j-1) of them.
std::vector<WeakComposition> weak_compositions(int i, int j);

// All N^j tuples with entries in 1..N.
std::vector<CoordinateTuple> coordinate_tuples(int j, int N);

// n! / (k_1! ... k_j!), exact; throws std::overflow_error when the value
// does not fit in int64.
std::int64_t multinomial(int n, const std::vector<int>& parts);
inline std::int64_t multinomial(int n, const WeakComposition& k) {
  return multinomial(n, k.parts);
}
inline std::int64_t multinomial(int n, const Composition& k) {
  return multinomial(n, k.parts);
}

std::int64_t binomial(int n, int k);
std::int64_t factorial(int n);

// Stirling numbers of the second kind S(n, j).
std::int64_t stirling2(int n, int j);

}  // namespace wco

#endif  // WCO_MULTIINDEX_HPP
