#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroidwb/poly.hpp"
#include "matroidwb/rational.hpp"

namespace matroidwb {

enum class Outcome { kHolds, kFails, kInconclusive };

enum class CertificateKind { kNone, kAllOnesExact, kCoefficientNonneg, kSOSGram, kSinglePairWagner };

const char* outcome_name(Outcome o);
const char* certificate_name(CertificateKind k);

// p = m^T Q m over a multi-affine monomial basis m, with Q symmetric PSD.
struct GramCertificate {
  int num_vars = 0;
  std::vector<Monomial> basis;
  std::vector<std::vector<Rational>> gram;

  // m^T Q m expanded exactly.
  BoundedPoly expand() const;
};

struct Witness {
  std::vector<Rational> point;  // all variables, 1-indexed by position
  Rational value;               // exact, strictly negative
};

struct Verdict {
  std::string property;
  Outcome outcome = Outcome::kInconclusive;
  CertificateKind certificate = CertificateKind::kNone;
  CertificateKind inner_certificate = CertificateKind::kNone;  // for kSinglePairWagner
  std::optional<GramCertificate> gram;
  std::optional<Witness> witness;
  std::optional<std::pair<int, int>> pair;       // pair the verdict refers to
  std::optional<std::pair<Subset, Subset>> sets;  // (S, T) for the lattice condition, (C, D) for minors
  std::optional<Rational> c;                      // constant of a c-Rayleigh check
  std::vector<std::string> tiers_run;
  std::string diagnostics;
  std::optional<double> best_value;  // lowest float objective seen by the search
  std::optional<Outcome> single_pair;  // outcome at the designated pair, before any cross-check
  std::optional<Outcome> cross_check;  // all-pairs outcome when a single-pair verdict was cross-checked
  std::uint64_t seed = 0;
  double wall_ms = 0;

  bool holds() const { return outcome == Outcome::kHolds; }
  bool fails() const { return outcome == Outcome::kFails; }
};

}  // namespace matroidwb
