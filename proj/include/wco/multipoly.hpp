#ifndef WCO_MULTIPOLY_HPP
#define WCO_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "wco/multiindex.hpp"
#include "wco/types.hpp"

namespace wco {

// Sparse polynomial over C^N: exponent multi-index -> complex coefficient.
// Zero coefficients are never stored; term order is lexicographic in the
// exponent, which keeps every derived computation deterministic.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, cdouble>;

  explicit MultiPoly(int dim = 1) : dim_(dim) {}

  static MultiPoly constant(int dim, cdouble c);
  // z_p (1-based p)
  static MultiPoly coordinate(int dim, int p);
  static MultiPoly monomial(int dim, std::vector<int> exponents, cdouble c);

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max |beta|, -1 for the zero polynomial
  cdouble coeff(const std::vector<int>& exponents) const;
  cdouble at_zero() const;

  void add_term(const std::vector<int>& exponents, cdouble c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(cdouble c) const;

  cdouble eval(const Point& z) const;

  // d/dz_p (1-based).
  MultiPoly partial(int p) const;
  // Iterated partial along a coordinate tuple; order is immaterial.
  MultiPoly partial(const CoordinateTuple& l) const;

  // n-th radial derivative: z^beta -> |beta|^n z^beta.
  MultiPoly radial(int n) const;

  // f(phi_1, ..., phi_N); throws std::length_error if the intermediate
  // term count exceeds term_cap.
  MultiPoly compose(const std::vector<MultiPoly>& phi,
                    std::size_t term_cap = 1000000) const;

  // f^k by binary powering, same cap discipline as compose.
  MultiPoly pow(int k, std::size_t term_cap = 1000000) const;

  bool operator==(const MultiPoly& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

 private:
  int dim_;
  TermMap terms_;
};

inline MultiPoly operator*(cdouble c, const MultiPoly& p) { return p * c; }

// max |coeff difference| between two polynomials over the union of terms
double max_coeff_diff(const MultiPoly& a, const MultiPoly& b);

}  // namespace wco

#endif  // WCO_MULTIPOLY_HPP
