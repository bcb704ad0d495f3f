#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matroidwb/constructions.hpp"
#include "matroidwb/matroid.hpp"
#include "matroidwb/rational.hpp"
#include "matroidwb/subset.hpp"

namespace matroidwb {

// Exponent vector with every exponent in {0,1,2}: variables in `linear` have
// exponent 1, variables in `squared` exponent 2. The two masks are disjoint.
struct Monomial {
  Subset linear = 0;
  Subset squared = 0;

  int exponent(int var) const { return contains(squared, var) ? 2 : (contains(linear, var) ? 1 : 0); }
  int degree() const { return popcount(linear) + 2 * popcount(squared); }
  Subset variables() const { return linear | squared; }
  std::uint64_t key() const { return (std::uint64_t{squared} << 32) | linear; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.key() == b.key(); }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

// Product of two monomials, or false if some exponent would exceed 2.
bool multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out);

// Polynomial in x_1..x_n with per-variable degree at most 2 and exact rational
// coefficients. Terms are kept sorted by Monomial::key with no zero entries.
class BoundedPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit BoundedPoly(int n = 0) : n_(n) {}
  // Merges duplicate monomials and drops zero coefficients.
  static BoundedPoly from_terms(int n, std::vector<Term> terms);
  static BoundedPoly constant(int n, const Rational& c);
  static BoundedPoly variable(int n, int var);

  int num_vars() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_multi_affine() const;
  Subset active_variables() const;
  int total_degree() const;  // -1 for the zero polynomial
  int min_degree() const;
  Rational coefficient(const Monomial& m) const;

  BoundedPoly operator+(const BoundedPoly& other) const;
  BoundedPoly operator-(const BoundedPoly& other) const;
  BoundedPoly operator-() const;
  BoundedPoly scaled(const Rational& c) const;

  friend bool operator==(const BoundedPoly& a, const BoundedPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

 private:
  int n_;
  std::vector<Term> terms_;
};

BoundedPoly basis_poly(const Matroid& m);
BoundedPoly derivative(const BoundedPoly& f, int var);
// Throws kDegreeOverflow when some exponent would exceed 2.
BoundedPoly multiply(const BoundedPoly& f, const BoundedPoly& g);
Rational evaluate(const BoundedPoly& f, const std::vector<Rational>& point);
double evaluate_float(const BoundedPoly& f, const std::vector<double>& point);

// Splits a multi-affine f as x_i x_j A + x_i B + x_j C + D.
struct PairSplit {
  BoundedPoly both, only_i, only_j, neither;
};
PairSplit split_pair(const BoundedPoly& f, int i, int j);

// Rayleigh difference d_i f * d_j f - d_ij f * f, computed as B*C - A*D.
BoundedPoly rayleigh_diff(const BoundedPoly& f, int i, int j);

// c * d_i f * d_j f - d_ij f * f.
BoundedPoly scaled_rayleigh_diff(const BoundedPoly& f, int i, int j, const Rational& c);

// One term per line, "<coeff> : <x_a^k ...>", in lexicographic order with
// x_1 most significant and higher exponents first.
std::string dump(const BoundedPoly& f);

struct Measure {
  int n = 0;
  std::map<Subset, Rational> weights;  // zero weights are not stored

  void validate() const;
};

BoundedPoly generating_poly(const Measure& mu);
// Throws kNotAProbabilityPolynomial unless f is multi-affine with nonnegative
// coefficients summing to one.
Measure measure_from_poly(const BoundedPoly& f);
Measure uniform_basis_measure(const Matroid& m);

using EdgeWeights = std::vector<Rational>;  // one nonnegative weight per edge

// Vertex variables x_1..x_v. Throw kLoopPresent on graphs with loops.
BoundedPoly matching_poly(const MultiGraph& g, const EdgeWeights& lambda);
BoundedPoly complementary_matching_poly(const MultiGraph& g, const EdgeWeights& lambda);
// side_a is a vertex set; every edge must join side_a to its complement
// (kNotBipartite otherwise). Only side_a variables appear.
BoundedPoly restricted_matching_poly(const MultiGraph& g, Subset side_a, const EdgeWeights& lambda);
std::map<Subset, Rational> c_weights(const MultiGraph& g, Subset side_a, const EdgeWeights& lambda);

// Signed incidence vectors with one root row removed per component. The sum
// of x_e a_e a_e^T has determinant equal to the spanning-forest polynomial.
std::vector<std::vector<int>> determinantal_rep_graphic(const MultiGraph& g);

}  // namespace matroidwb
