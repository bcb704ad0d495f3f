#include <gtest/gtest.h>

#include "../support/random_matroids.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/fixtures.hpp"

using namespace matroidwb;
namespace tst = matroidwb::testing;
namespace oracle = matroidwb::testing::oracle;

namespace {

Subset S(std::initializer_list<int> e) { return subset_of(std::vector<int>(e)); }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Constructions, UniformCounts) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(uniform(k, n).num_bases(), static_cast<std::size_t>(binomial(n, k)));
  }
}

TEST(Constructions, GraphicMatchesSpanningForestOracle) {
  // Cayley: K_n has n^(n-2) spanning trees.
  EXPECT_EQ(graphic(complete_graph(4)).num_bases(), 16u);
  EXPECT_EQ(graphic(complete_graph(5)).num_bases(), 125u);
  EXPECT_EQ(graphic(complete_bipartite_graph(2, 3)).num_bases(), 12u);
  tst::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph g = tst::random_graph(rng, 6, 9, true);
    auto want = oracle::spanning_forests(g);
    std::sort(want.begin(), want.end(), canonical_less);
    ASSERT_EQ(graphic(g).bases(), want);
  }
}

TEST(Constructions, BicircularAndWhirl) {
  // One cycle per component is independent: a triangle gives U(3,3).
  EXPECT_EQ(bicircular(cycle_graph(3)), uniform(3, 3));
  const Matroid w3 = whirl(3);
  EXPECT_EQ(w3.size(), 6);
  EXPECT_EQ(w3.rank(), 3);
  EXPECT_EQ(w3.num_bases(), 17u);
  EXPECT_EQ(bicircular(whirl_graph(3)), w3);
  EXPECT_EQ(bicircular_presentation(cycle_graph(3)).family.size(), 3u);
}

TEST(Constructions, TransversalOfIntervals) {
  EXPECT_EQ(transversal(SetSystem{4, {S({1, 2}), S({2, 3}), S({3, 4})}}), uniform(3, 4));
  const Matroid m = transversal(SetSystem{4, {S({1, 2}), S({1, 2}), S({3, 4})}});
  EXPECT_EQ(m.bases(), (std::vector<Subset>{S({1, 2, 3}), S({1, 2, 4})}));
}

TEST(Constructions, LatticePathExample) {
  const Matroid m = example_lpm();
  EXPECT_EQ(m.bases(), example_bases());
  const auto pp = LatticePathPair::from_bounds({1, 2, 5}, {3, 5, 6}, 6);
  EXPECT_EQ(pp.lower_bounds(), (std::vector<int>{1, 2, 5}));
  EXPECT_EQ(pp.upper_bounds(), (std::vector<int>{3, 5, 6}));
  EXPECT_EQ(lattice_path(pp.transposed()), dual(m));
}

TEST(Constructions, LatticePathRejectsCrossingPaths) {
  EXPECT_THROW(LatticePathPair("NE", "EN"), MatroidError);
  EXPECT_THROW(LatticePathPair("NN", "NE"), MatroidError);
  EXPECT_THROW(LatticePathPair("NX", "NE"), MatroidError);
  EXPECT_NO_THROW(LatticePathPair("EN", "NE"));
}

TEST(Constructions, SnakesAreThinLatticePaths) {
  EXPECT_TRUE(is_snake(LatticePathPair("EEN", "NEE")));
  EXPECT_FALSE(is_snake(LatticePathPair("ENE", "NEE")));  // element 3 is a loop
  EXPECT_FALSE(is_snake(LatticePathPair("EENN", "NNEE")));
}

TEST(Constructions, PrincipalTruncationAndExtension) {
  const Matroid m = example_lpm();
  // F = {6}: the example's lists.
  EXPECT_EQ(principal_truncation(m, S({6})).bases(), example_truncation_bases());
  EXPECT_EQ(principal_extension(m, S({6})).bases().size(), example_extension_bases().size());
  // F = ground set: truncation is the plain truncation, U(2,6) here.
  EXPECT_EQ(principal_truncation(m, m.ground_set()).num_bases(), 15u);
  try {
    principal_truncation(add_loop(m), S({7}));
    FAIL() << "expected kFDisjointFromAllBases";
  } catch (const MatroidError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFDisjointFromAllBases);
  }
}

TEST(Constructions, ExtensionIsFreeOnF) {
  tst::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = tst::random_matroid(rng, 6);
    if (m.rank() == 0) continue;
    const Subset f = m.support();
    if (!f) continue;
    const Matroid x = principal_extension(m, f);
    ASSERT_TRUE(oracle::satisfies_exchange(x.size(), x.bases()));
    // Deleting the new element gives m back.
    ASSERT_EQ(deletion(x, bit_of(x.size())).matroid, m);
    // Contracting it gives the truncation.
    ASSERT_EQ(contraction(x, bit_of(x.size())).matroid, principal_truncation(m, f));
  }
}

TEST(Constructions, RecursiveLatticePathBuild) {
  const Matroid u13 = lpm_recursive_build({BuildStep::coloop(), BuildStep::principal(1), BuildStep::principal(2)});
  EXPECT_EQ(u13, uniform(1, 3));
  EXPECT_THROW(lpm_recursive_build({BuildStep::coloop(), BuildStep::principal(1), BuildStep::principal(1)}), MatroidError);
}

TEST(Constructions, LoopAndColoop) {
  const Matroid m = uniform(1, 2);
  EXPECT_EQ(add_loop(m).bases(), m.bases());
  EXPECT_EQ(add_loop(m).size(), 3);
  EXPECT_EQ(add_coloop(m).coloops(), S({3}));
}

TEST(Constructions, Atlas) {
  EXPECT_EQ(named_atlas("MK4").num_bases(), 16u);
  EXPECT_EQ(named_atlas("TicTacToe"), dual(named_atlas("BK33")));
  EXPECT_EQ(named_atlas("TicTacToe").rank(), 3);
  EXPECT_THROW(named_atlas("Fano"), MatroidError);
  EXPECT_EQ(atlas_names().size(), 5u);
}
