#include <gtest/gtest.h>

#include "../support/random_matroids.hpp"
#include "matroidwb/analysis.hpp"
#include "matroidwb/classifiers.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/fixtures.hpp"

using namespace matroidwb;
namespace tst = matroidwb::testing;

namespace {

Subset S(std::initializer_list<int> e) { return subset_of(std::vector<int>(e)); }

Matroid fano() {
  const std::vector<Subset> lines = {S({1, 2, 4}), S({2, 3, 5}), S({3, 4, 6}), S({4, 5, 7}),
                                     S({1, 5, 6}), S({2, 6, 7}), S({1, 3, 7})};
  std::vector<Subset> bases;
  for_each_k_subset(7, 3, [&](Subset s) {
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) bases.push_back(s);
  });
  return Matroid::from_bases(7, bases);
}

// Binary matroid S8 = [I_4 | A] over GF(2); not negatively correlated.
Matroid s8() {
  const unsigned cols[8] = {0b1000, 0b0100, 0b0010, 0b0001, 0b0111, 0b1011, 0b1101, 0b1111};
  std::vector<Subset> bases;
  for_each_k_subset(8, 4, [&](Subset s) {
    std::vector<unsigned> basis;
    for (int e : elements_of(s)) {
      unsigned v = cols[e - 1];
      for (unsigned b : basis) v = std::min(v, v ^ b);
      if (v) basis.push_back(v);
    }
    if (basis.size() == 4) bases.push_back(s);
  });
  return Matroid::from_bases(8, bases);
}

}  // namespace

TEST(NegCorr, CountsOnU24) {
  const Verdict v = neg_corr(uniform(2, 4), 1, 2);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.certificate, CertificateKind::kAllOnesExact);
  EXPECT_THROW(neg_corr(uniform(2, 4), 1, 1), MatroidError);
}

TEST(NegCorr, S8FailsWithAllOnesWitness) {
  const Matroid m = s8();
  ASSERT_EQ(m.num_bases(), 48u);
  const Verdict v = neg_corr_all_pairs(m);
  ASSERT_TRUE(v.fails());
  EXPECT_EQ(v.pair, (Pair{4, 8}));
  EXPECT_EQ(v.witness->value, -16);
  EXPECT_EQ(v.witness->point, std::vector<Rational>(8, Rational(1)));
  EXPECT_FALSE(is_balanced(m).holds());
  for (const Matroid& sp : sparse_paving_family(6, 3, 100)) EXPECT_TRUE(neg_corr_all_pairs(sp).holds());
}

TEST(Balanced, HoldsOnSmallFamilies) {
  EXPECT_TRUE(is_balanced(uniform(2, 4)).holds());
  EXPECT_TRUE(is_balanced(graphic(complete_graph(4))).holds());
  EXPECT_TRUE(is_balanced(fano()).holds());
  EXPECT_TRUE(is_balanced(whirl(3)).holds());
}

TEST(Rayleigh, UniformAndGraphicHold) {
  HppOptions opts;
  opts.budget = 2000;
  EXPECT_TRUE(rayleigh_verdict(basis_poly(uniform(2, 4)), std::nullopt, opts).holds());
  const Verdict mk4 = strong_rayleigh_verdict(basis_poly(graphic(complete_graph(4))), std::nullopt, opts);
  EXPECT_TRUE(mk4.holds());
  EXPECT_EQ(mk4.certificate, CertificateKind::kSOSGram);
}

TEST(Rayleigh, SinglePairCertificateIsVerifiable) {
  AnalysisOptions opts;
  opts.budget = 1000;
  const BoundedPoly f = basis_poly(graphic(complete_graph(4)));
  const Verdict v = strong_rayleigh_verdict(f, Pair{1, 2}, opts);
  ASSERT_TRUE(v.holds());
  ASSERT_TRUE(v.gram);
  EXPECT_TRUE(verify_gram(*v.gram, rayleigh_diff(f, 1, 2)));
}

TEST(Rayleigh, FanoIsNotStronglyRayleigh) {
  const Matroid m = fano();
  const BoundedPoly f = basis_poly(m);
  const Verdict v = strong_rayleigh_verdict(f, std::nullopt, {});
  ASSERT_TRUE(v.fails());
  ASSERT_TRUE(v.witness && v.pair);
  EXPECT_LT(v.witness->value, 0);
  EXPECT_EQ(evaluate(rayleigh_diff(f, v.pair->first, v.pair->second), v.witness->point), v.witness->value);
  // Every rank-3 matroid is Rayleigh, so the orthant search must not refute it.
  AnalysisOptions opts;
  opts.run_sos = false;
  EXPECT_FALSE(rayleigh_verdict(f, std::nullopt, opts).fails());
}

TEST(Rayleigh, VerdictsAreDeterministicPerSeed) {
  AnalysisOptions opts;
  opts.seed = 42;
  opts.run_sos = false;
  const BoundedPoly f = basis_poly(fano());
  const Verdict a = strong_rayleigh_verdict(f, std::nullopt, opts);
  const Verdict b = strong_rayleigh_verdict(f, std::nullopt, opts);
  ASSERT_TRUE(a.witness && b.witness);
  EXPECT_EQ(a.witness->point, b.witness->point);
  EXPECT_EQ(a.pair, b.pair);
}

TEST(CRayleigh, OneIsRayleighAndLargerCIsWeaker) {
  AnalysisOptions opts;
  opts.budget = 2000;
  const BoundedPoly f = basis_poly(uniform(2, 4));
  const Verdict one = c_rayleigh_verdict(f, 1, std::nullopt, opts);
  EXPECT_TRUE(one.holds());
  ASSERT_TRUE(one.c);
  EXPECT_EQ(*one.c, 1);
  EXPECT_TRUE(c_rayleigh_verdict(f, Rational(8) / 7, std::nullopt, opts).holds());
  // Small c eventually fails for U(2,4): at the all-ones point d_12 f f / (d_1 f d_2 f) = 6/9.
  const Verdict tight = c_rayleigh_verdict(f, Rational(1) / 2, std::nullopt, opts);
  EXPECT_TRUE(tight.fails());
  EXPECT_THROW(c_rayleigh_verdict(f, 0, std::nullopt, opts), MatroidError);
}

TEST(MinC, BoundIsScaleInvariantAndBelowOne) {
  const BoundedPoly f = basis_poly(uniform(2, 4));
  const auto a = min_c_estimate(f, 300, 5);
  const auto b = min_c_estimate(f.scaled(7), 300, 5);
  EXPECT_EQ(a.bound, b.bound);
  EXPECT_GE(a.bound, Rational(2) / 3);  // the all-ones sample
  EXPECT_LE(a.bound, 1);
  EXPECT_EQ(min_c_estimate(basis_poly(uniform(1, 1)), 10, 1).bound, 0);
}

TEST(Hpp, RegularAndUniformHold) {
  HppOptions opts;
  opts.budget = 2000;
  const Verdict v = hpp_verdict(graphic(complete_graph(4)), opts);
  EXPECT_TRUE(v.holds());
  EXPECT_EQ(v.certificate, CertificateKind::kSinglePairWagner);
  EXPECT_EQ(v.inner_certificate, CertificateKind::kSOSGram);
  EXPECT_EQ(designated_pair(graphic(complete_graph(4))), (Pair{1, 2}));
}

TEST(Hpp, FanoFailsAndCrossCheckAgrees) {
  HppOptions opts;
  opts.cross_check_all_pairs = true;
  const Verdict v = hpp_verdict(fano(), opts);
  EXPECT_TRUE(v.fails());
  ASSERT_TRUE(v.cross_check);
  EXPECT_EQ(*v.cross_check, Outcome::kFails);
}

TEST(Hpp, DisconnectedMatroidLiftsWitness) {
  // Fano plus a disjoint U(1,2): the failure lives in the first component.
  const Matroid m = direct_sum(fano(), uniform(1, 2));
  const Verdict v = hpp_verdict(m, {});
  ASSERT_TRUE(v.fails());
  ASSERT_EQ(v.witness->point.size(), 9u);
  EXPECT_EQ(evaluate(rayleigh_diff(basis_poly(m), v.pair->first, v.pair->second), v.witness->point), v.witness->value);
  EXPECT_TRUE(hpp_verdict(direct_sum(uniform(1, 2), uniform(2, 3)), {}).holds());
}

TEST(Nlc, SpecExamples) {
  EXPECT_TRUE(nlc_check(uniform_basis_measure(graphic(complete_graph(4)))).holds());
  Measure bad;
  bad.n = 2;
  bad.weights[0] = Rational(1) / 2;
  bad.weights[S({1, 2})] = Rational(1) / 2;
  const Verdict v = nlc_check(bad);
  ASSERT_TRUE(v.fails());
  ASSERT_TRUE(v.sets);
  EXPECT_EQ(v.sets->first | v.sets->second, S({1, 2}));
  EXPECT_EQ(v.sets->first & v.sets->second, 0u);
  // Product measure: equality everywhere.
  Measure prod;
  prod.n = 2;
  for (Subset s = 0; s < 4; ++s) prod.weights[s] = Rational(1) / 4;
  EXPECT_TRUE(nlc_check(prod).holds());
}

TEST(NiceExtension, SpecExamples) {
  const auto u24 = nice_extension_weights(uniform(2, 4), S({1, 2, 3, 4}));
  ASSERT_TRUE(u24);
  for (const auto& [e, w] : *u24) EXPECT_EQ(w, Rational(1) / 3) << e;
  const Matroid with_coloop = add_coloop(uniform(1, 2));
  const auto c = nice_extension_weights(with_coloop, S({3}));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 1u);
  EXPECT_EQ(c->at(3), 1);
}

TEST(NiceExtension, ExampleReportIsReproducible) {
  const auto a = nice_extension_report(example_lpm(), full_set(6));
  const auto b = nice_extension_report(example_lpm(), full_set(6));
  EXPECT_EQ(a.k, 6);
  EXPECT_EQ(a.extenders, full_set(6));
  EXPECT_EQ(a.equations, b.equations);
  EXPECT_EQ(a.uniform_satisfies, b.uniform_satisfies);
  EXPECT_EQ(a.solution.has_value(), b.solution.has_value());
  if (a.solution) EXPECT_TRUE(a.solution_verified);
}

TEST(AnalysisProperty, HierarchyOnRandomMatroids) {
  tst::Rng rng(123);
  HppOptions opts;
  opts.budget = 1500;
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid m = tst::random_matroid(rng, 6);
    const Verdict hpp = hpp_verdict(m, opts);
    const Verdict ray = rayleigh_verdict(basis_poly(m), std::nullopt, opts);
    const Verdict nc = neg_corr_all_pairs(m);
    if (hpp.holds()) ASSERT_FALSE(ray.fails());
    if (!ray.fails()) ASSERT_TRUE(nc.holds());
    if (is_balanced(m).holds()) ASSERT_TRUE(nc.holds());
  }
}

TEST(Seeds, MixSeedSeparatesPairs) {
  EXPECT_NE(mix_seed(1, 1, 2), mix_seed(1, 2, 1));
  EXPECT_NE(mix_seed(1, 1, 2), mix_seed(2, 1, 2));
  EXPECT_EQ(mix_seed(9, 3, 4), mix_seed(9, 3, 4));
}
