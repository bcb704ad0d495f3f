#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "matroidwb/errors.hpp"
#include "matroidwb/subset.hpp"

namespace matroidwb {

// A matroid on [n] given by its bases. Values are immutable once built; the
// basis list is deduplicated and kept in canonical (lexicographic) order.
class Matroid {
 public:
  // Validating constructor: checks cardinalities and the exchange axiom.
  // Throws MatroidError (kEmptyBases, kMixedCardinality, kExchangeViolation,
  // kInvalidArgument).
  static Matroid from_bases(int n, std::vector<Subset> bases);

  // Skips the exchange check. Used by constructions whose output is a matroid
  // by theory; the test suite validates those separately.
  static Matroid trusted(int n, std::vector<Subset> bases);

  int size() const { return n_; }
  int rank() const { return r_; }
  const std::vector<Subset>& bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }
  Subset ground_set() const { return full_set(n_); }

  bool is_basis(Subset s) const {
    return (table_[s >> 6] >> (s & 63)) & 1u;
  }

  // Union of all bases; elements outside it are loops.
  Subset support() const;
  // Intersection of all bases (the coloops).
  Subset coloops() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, std::vector<Subset> bases);

  int n_ = 0;
  int r_ = 0;
  std::vector<Subset> bases_;
  std::vector<std::uint64_t> table_;
};

struct CircuitSet {
  int n = 0;
  std::vector<Subset> circuits;  // canonical order (by size, then lexicographic)
};

// Result of a deletion or contraction: labels[k] is the original element that
// became element k+1 of the minor.
struct Minor {
  Matroid matroid;
  std::vector<int> labels;
};

// Returns the first exchange failure (I, J, a) or nothing.
struct ExchangeFailure {
  Subset I = 0, J = 0;
  int a = 0;
};
std::optional<ExchangeFailure> find_exchange_violation(int n, const std::vector<Subset>& bases);

int rank_of(const Matroid& m, Subset s);
Subset closure(const Matroid& m, Subset s);
bool is_independent(const Matroid& m, Subset s);

// Rank of every subset of [n], indexed by Subset. Size 2^n.
std::vector<std::uint8_t> rank_table(const Matroid& m);

CircuitSet circuits(const Matroid& m);

Matroid dual(const Matroid& m);
Minor deletion(const Matroid& m, Subset s);
Minor contraction(const Matroid& m, Subset s);
Minor restriction(const Matroid& m, Subset s);

Matroid direct_sum(const Matroid& a, const Matroid& b);

// 2-sum along basepoints p of a and q of b. Ground set of the result is
// (E(a) - p) in order, followed by (E(b) - q) in order.
Matroid two_sum(const Matroid& a, int p, const Matroid& b, int q);

// Witness permutation perm with perm[e-1] = image of element e, or nothing.
std::optional<std::vector<int>> isomorphism(const Matroid& a, const Matroid& b);
inline bool is_isomorphic(const Matroid& a, const Matroid& b) { return isomorphism(a, b).has_value(); }

// Same search for arbitrary families of subsets of [n].
std::optional<std::vector<int>> family_isomorphism(int n, const std::vector<Subset>& a,
                                                   const std::vector<Subset>& b);

bool has_minor(const Matroid& m, const Matroid& n);

bool is_connected(const Matroid& m);
// Partition (A, B) with |A|, |B| >= 2 and r(A) + r(B) - r(M) <= 1; A contains element 1.
std::optional<std::pair<Subset, Subset>> two_separation(const Matroid& m);
// Connected components (separators) as element sets, ordered by smallest element.
std::vector<Subset> components(const Matroid& m);

bool is_circuit_hyperplane(const Matroid& m, Subset h);
Matroid relax(const Matroid& m, Subset h);

// Relabels elements: element e of m becomes perm[e-1].
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

}  // namespace matroidwb
