#include <gtest/gtest.h>

#include "../support/random_matroids.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/matroid.hpp"

using namespace matroidwb;
namespace tst = matroidwb::testing;
namespace oracle = matroidwb::testing::oracle;

namespace {

Subset S(std::initializer_list<int> e) { return subset_of(std::vector<int>(e)); }

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MatroidError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MatroidError thrown";
  return ErrorCode::kInvalidArgument;
}

// Rank by maximum intersection with a basis.
int brute_rank(const Matroid& m, Subset s) {
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, popcount(b & s));
  return best;
}

}  // namespace

TEST(Matroid, FromBasesRejectsBadInput) {
  EXPECT_EQ(code_of([] { Matroid::from_bases(3, {}); }), ErrorCode::kEmptyBases);
  EXPECT_EQ(code_of([] { Matroid::from_bases(3, {S({1}), S({1, 2})}); }), ErrorCode::kMixedCardinality);
  // {12, 34}: exchanging 1 out of 12 needs 13 or 14.
  EXPECT_EQ(code_of([] { Matroid::from_bases(4, {S({1, 2}), S({3, 4})}); }), ErrorCode::kExchangeViolation);
  EXPECT_EQ(code_of([] { Matroid::from_bases(2, {S({3})}); }), ErrorCode::kInvalidArgument);
}

TEST(Matroid, BasesAreCanonicalAndDeduplicated) {
  const Matroid m = Matroid::from_bases(3, {S({2, 3}), S({1, 2}), S({1, 3}), S({1, 2})});
  EXPECT_EQ(m.bases(), (std::vector<Subset>{S({1, 2}), S({1, 3}), S({2, 3})}));
  EXPECT_EQ(m.rank(), 2);
  EXPECT_TRUE(m.is_basis(S({1, 3})));
  EXPECT_FALSE(m.is_basis(S({1})));
}

TEST(Matroid, RankClosureIndependence) {
  const Matroid k4 = graphic(complete_graph(4));
  // Edges 12,13,14,23,24,34; the triangle 1-2-3 is {1,2,4}.
  EXPECT_EQ(rank_of(k4, S({1, 2, 4})), 2);
  EXPECT_EQ(closure(k4, S({1, 2})), S({1, 2, 4}));
  EXPECT_FALSE(is_independent(k4, S({1, 2, 4})));
  EXPECT_TRUE(is_independent(k4, S({1, 2, 3})));
  const auto table = rank_table(k4);
  for (Subset s = 0; s <= k4.ground_set(); ++s) ASSERT_EQ(table[s], brute_rank(k4, s));
}

TEST(Matroid, CircuitsOfK4) {
  const auto c = circuits(graphic(complete_graph(4)));
  // 4 triangles and 3 four-cycles.
  ASSERT_EQ(c.circuits.size(), 7u);
  EXPECT_EQ(popcount(c.circuits.front()), 3);
  EXPECT_EQ(popcount(c.circuits.back()), 4);
}

TEST(Matroid, DualMinorsAndSums) {
  const Matroid u24 = uniform(2, 4);
  EXPECT_EQ(dual(u24), u24);
  const Matroid m = graphic(complete_graph(4));
  EXPECT_EQ(dual(dual(m)), m);
  const Minor del = deletion(m, S({6}));
  EXPECT_EQ(del.matroid.size(), 5);
  EXPECT_EQ(del.labels, (std::vector<int>{1, 2, 3, 4, 5}));
  // Deletion and contraction are exchanged by duality.
  EXPECT_EQ(dual(deletion(m, S({2})).matroid), contraction(dual(m), S({2})).matroid);
  const Matroid sum = direct_sum(uniform(1, 2), uniform(1, 2));
  EXPECT_EQ(sum.num_bases(), 4u);
  EXPECT_EQ(components(sum), (std::vector<Subset>{S({1, 2}), S({3, 4})}));
  EXPECT_FALSE(is_connected(sum));
}

TEST(Matroid, TwoSumOfTrianglesIsFourCycle) {
  const Matroid tri = graphic(cycle_graph(3));
  const Matroid c4 = two_sum(tri, 3, tri, 1);
  EXPECT_TRUE(is_isomorphic(c4, graphic(cycle_graph(4))));
  EXPECT_EQ(code_of([&] { two_sum(direct_sum(uniform(1, 1), uniform(1, 2)), 1, tri, 1); }),
            ErrorCode::kBasepointIsSeparator);
}

TEST(Matroid, IsomorphismAndRelabel) {
  const Matroid m = graphic(complete_graph(4));
  const std::vector<int> perm = {6, 5, 4, 3, 2, 1};
  const Matroid r = relabel(m, perm);
  const auto iso = isomorphism(m, r);
  ASSERT_TRUE(iso);
  EXPECT_EQ(relabel(m, *iso), r);
  EXPECT_FALSE(is_isomorphic(m, whirl(3)));
}

TEST(Matroid, RelaxationOfCircuitHyperplane) {
  const Matroid k4 = graphic(complete_graph(4));
  EXPECT_TRUE(is_circuit_hyperplane(k4, S({1, 2, 4})));
  EXPECT_FALSE(is_circuit_hyperplane(k4, S({1, 2, 3})));
  EXPECT_EQ(relax(k4, S({1, 2, 4})).num_bases(), 17u);
  EXPECT_EQ(code_of([&] { relax(k4, S({1, 2, 3})); }), ErrorCode::kNotCircuitHyperplane);
}

TEST(Matroid, TwoSeparationOfFourCycle) {
  EXPECT_FALSE(two_separation(uniform(2, 4)));
  EXPECT_TRUE(two_separation(graphic(cycle_graph(4))));
}

TEST(Matroid, HasMinor) {
  EXPECT_TRUE(has_minor(graphic(complete_graph(4)), graphic(cycle_graph(3))));
  EXPECT_FALSE(has_minor(graphic(complete_graph(4)), uniform(2, 4)));
  EXPECT_TRUE(has_minor(whirl(3), uniform(2, 4)));
}

// Property tests on random matroids against brute-force oracles.
TEST(MatroidProperty, RandomMatroidsSatisfyAxiomsAndDualityIdentities) {
  tst::Rng rng(20261016);
  for (int trial = 0; trial < 150; ++trial) {
    const Matroid m = tst::random_matroid(rng, 7);
    ASSERT_TRUE(oracle::satisfies_exchange(m.size(), m.bases()));
    const Matroid d = dual(m);
    ASSERT_EQ(d.rank(), m.size() - m.rank());
    ASSERT_EQ(dual(d), m);
    const auto table = rank_table(m);
    const auto dtable = rank_table(d);
    for (Subset s = 0; s <= m.ground_set(); ++s) {
      ASSERT_EQ(table[s], brute_rank(m, s));
      // r*(S) = |S| + r(E - S) - r(E)
      ASSERT_EQ(dtable[s], popcount(s) + table[m.ground_set() & ~s] - m.rank());
    }
    for (Subset c : circuits(m).circuits) {
      ASSERT_FALSE(is_independent(m, c));
      for (int e : elements_of(c)) ASSERT_TRUE(is_independent(m, c & ~bit_of(e)));
    }
  }
}

TEST(MatroidProperty, FromBasesAgreesWithExchangeOracle) {
  tst::Rng rng(7);
  int accepted = 0, rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    std::vector<Subset> family;
    for_each_k_subset(n, r, [&](Subset s) {
      if (rng() % 3 != 0) family.push_back(s);
    });
    if (family.empty()) continue;
    const bool ok = oracle::satisfies_exchange(n, family);
    bool built = true;
    try {
      Matroid::from_bases(n, family);
    } catch (const MatroidError& e) {
      built = false;
      EXPECT_EQ(e.code(), ErrorCode::kExchangeViolation);
    }
    ASSERT_EQ(built, ok);
    (ok ? accepted : rejected)++;
  }
  EXPECT_GT(accepted, 0);
  EXPECT_GT(rejected, 0);
}
