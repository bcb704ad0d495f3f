#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matroidwb/poly.hpp"
#include "matroidwb/verdict.hpp"

namespace matroidwb {

enum class Domain { kPositiveOrthant, kAllReals };

struct SearchOptions {
  Domain domain = Domain::kPositiveOrthant;
  long budget = 20000;       // objective+gradient evaluations
  std::uint64_t seed = 1;
  double tolerance = 1e-9;   // float acceptance threshold before exact re-check
};

struct SearchResult {
  std::optional<Witness> witness;
  double best_value = 0;  // lowest normalized float objective seen
  long evaluations = 0;
};

// Compiled float form of a BoundedPoly with value and gradient.
class FloatPoly {
 public:
  explicit FloatPoly(const BoundedPoly& p);

  int num_vars() const { return n_; }
  double value(const double* x) const;
  // Returns the value; writes the gradient into grad (size num_vars()).
  double value_and_gradient(const double* x, double* grad) const;

 private:
  int n_;
  std::vector<double> coeff_;
  std::vector<int> start_;  // term k uses vars_[start_[k] .. start_[k+1])
  std::vector<int> vars_;   // 0-based variable index, repeated for squares
};

// Multi-start local descent on p / (1 + |x|^2)^(deg/2); on the positive orthant
// the variables are exp(u). Float candidates below -tolerance are rounded to
// nearby rationals and re-verified exactly; only exactly negative points are
// returned. Deterministic for a fixed seed.
SearchResult counterexample_search(const BoundedPoly& p, const SearchOptions& options);

}  // namespace matroidwb
