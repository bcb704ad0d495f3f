#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "matroidwb/matroid.hpp"
#include "matroidwb/poly.hpp"
#include "matroidwb/search.hpp"
#include "matroidwb/sos.hpp"
#include "matroidwb/verdict.hpp"

namespace matroidwb {

using Pair = std::pair<int, int>;

struct AnalysisOptions {
  long budget = 20000;  // search evaluations per pair
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  bool run_search = true;
  bool run_sos = true;
  SosOptions sos;
};

// N_e N_f >= N N_ef over the bases of m.
Verdict neg_corr(const Matroid& m, int e, int f);
Verdict neg_corr_all_pairs(const Matroid& m);

// Negative correlation in every minor M/C\D. Minors are enumerated through
// their basis families {B : C in B, B disjoint from D}; on failure `sets`
// holds (C, D) and `pair` the offending elements.
Verdict is_balanced(const Matroid& m);

// Delta_ij >= 0 on the positive orthant, for one pair or all pairs.
Verdict rayleigh_verdict(const BoundedPoly& f, std::optional<Pair> pair, const AnalysisOptions& options = {});

// Delta_ij >= 0 on all of R^n.
Verdict strong_rayleigh_verdict(const BoundedPoly& f, std::optional<Pair> pair, const AnalysisOptions& options = {});

// c * d_i f * d_j f - d_ij f * f >= 0 on the positive orthant. c = 1 is the
// Rayleigh check.
Verdict c_rayleigh_verdict(const BoundedPoly& f, const Rational& c, std::optional<Pair> pair,
                           const AnalysisOptions& options = {});

struct MinCEstimate {
  // Largest sampled (d_ij f * f) / (d_i f * d_j f); every valid c is at least this.
  Rational bound;
  std::optional<Pair> pair;
  std::vector<Rational> point;
  long samples = 0;
};
MinCEstimate min_c_estimate(const BoundedPoly& f, long samples = 2000, std::uint64_t seed = 1);

struct HppOptions : AnalysisOptions {
  bool cross_check_all_pairs = false;
};

// Half-plane property via the single-pair criterion on connected components.
// Disconnected matroids are decided component by component.
Verdict hpp_verdict(const Matroid& m, const HppOptions& options = {});

// Lexicographically smallest pair contained together in some basis.
std::optional<Pair> designated_pair(const Matroid& m);

// mu(S) mu(T) >= mu(S u T) mu(S n T) for all S, T.
Verdict nlc_check(const Measure& mu);

struct NiceExtensionReport {
  Subset f = 0;
  Subset extenders = 0;  // S: elements of F extending some truncation basis
  int k = 0;             // |S|
  std::vector<std::pair<Subset, int>> equations;  // truncation basis, number of extending f
  bool uniform_satisfies = false;                 // lambda = 1/k on S
  std::optional<std::map<int, Rational>> solution;
  bool solution_verified = false;
};

// One nonnegative solution of sum_{f in F, B+f basis} lambda_f = 1 over the
// truncation bases B, or nothing when the system has none.
std::optional<std::map<int, Rational>> nice_extension_weights(const Matroid& m, Subset f);
NiceExtensionReport nice_extension_report(const Matroid& m, Subset f);

// Splits a job seed into per-pair seeds independent of evaluation order.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace matroidwb
