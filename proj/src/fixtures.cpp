#include "matroidwb/fixtures.hpp"

#include <algorithm>

#include "matroidwb/analysis.hpp"
#include "matroidwb/classifiers.hpp"
#include "matroidwb/constructions.hpp"
#include "matroidwb/poly.hpp"

namespace matroidwb {

namespace {

// "125" -> {1,2,5}; digits are single elements.
std::vector<Subset> digit_sets(std::initializer_list<int> codes) {
  std::vector<Subset> out;
  for (int code : codes) {
    Subset s = 0;
    for (int c = code; c > 0; c /= 10) s |= bit_of(c % 10);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end(), canonical_less);
  return v;
}

FixtureResult compare_lists(std::string name, const std::vector<Subset>& got, const std::vector<Subset>& want) {
  FixtureResult r{std::move(name), sorted(got) == sorted(want), false, {}};
  r.detail = "got " + std::to_string(got.size()) + " sets " + compact_list(sorted(got)) + ", expected " +
             std::to_string(want.size()) + " sets " + compact_list(sorted(want));
  return r;
}

BoundedPoly squared_variable(int n, int e) { return BoundedPoly::from_terms(n, {{Monomial{0, bit_of(e)}, Rational(1)}}); }

// Delta_ij(x_e f) = x_e^2 Delta_ij(f) for i, j != e and Delta_ej(x_e f) = 0.
bool coloop_identities(const Matroid& m) {
  const Matroid g = add_coloop(m);
  const int e = g.size();
  const BoundedPoly f = basis_poly(m), fg = basis_poly(g);
  for (int i = 1; i < e; ++i) {
    if (!rayleigh_diff(fg, e, i).is_zero()) return false;
    for (int j = i + 1; j < e; ++j) {
      const BoundedPoly lhs = rayleigh_diff(fg, i, j);
      const BoundedPoly rhs = multiply(squared_variable(e, e), rayleigh_diff(f, i, j));
      if (lhs.terms() != rhs.terms()) return false;
    }
  }
  return true;
}

std::vector<Matroid> identity_corpus() {
  return {uniform(2, 4), graphic(complete_graph(4)), whirl(3), example_lpm(), uniform(1, 3), uniform(3, 5)};
}

}  // namespace

const std::vector<Subset>& example_bases() {
  static const auto v = digit_sets({125, 126, 135, 136, 145, 146, 156, 235, 236, 245, 246, 256, 345, 346, 356});
  return v;
}

const std::vector<Subset>& example_truncation_bases() {
  static const auto v = digit_sets({12, 13, 14, 15, 23, 24, 25, 34, 35});
  return v;
}

const std::vector<Subset>& example_extension_bases() {
  static const auto v = digit_sets({125, 126, 135, 136, 145, 146, 156, 235, 236, 245, 246, 256, 345, 346, 356, 127, 137,
                                    147, 157, 237, 247, 257, 347, 357});
  return v;
}

Matroid example_lpm() { return lattice_path(LatticePathPair::from_bounds({1, 2, 5}, {3, 5, 6}, 6)); }

std::string compact_list(const std::vector<Subset>& sets) {
  std::string out = "{";
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (k) out += ',';
    for (int e : elements_of(sets[k])) out += std::to_string(e);
  }
  return out + "}";
}

std::vector<FixtureResult> run_reference_fixtures(const FixtureOptions& options) {
  std::vector<FixtureResult> out;
  const Matroid m = example_lpm();
  const Subset all = full_set(6);

  const auto& want = options.example_override.empty() ? example_bases() : options.example_override;
  out.push_back(compare_lists("example M[125,356] bases", m.bases(), want));
  out.push_back(compare_lists("example truncation by F=[6]", principal_truncation(m, all).bases(), example_truncation_bases()));
  out.push_back(compare_lists("example extension by element 7 via F=[6]", principal_extension(m, all).bases(),
                              example_extension_bases()));
  {
    const bool t = sorted(principal_truncation(m, bit_of(6)).bases()) == example_truncation_bases();
    const bool x = sorted(principal_extension(m, bit_of(6)).bases()) == example_extension_bases();
    FixtureResult r{"example lists with F={6}", t && x, true, {}};
    r.detail = std::string("truncation ") + (t ? "matches" : "differs") + ", extension " + (x ? "matches" : "differs");
    out.push_back(r);
  }
  {
    bool ok = true;
    for (const auto& mm : identity_corpus()) ok = ok && coloop_identities(mm);
    out.push_back({"coloop Rayleigh identities", ok, false, std::to_string(identity_corpus().size()) + " matroids"});
  }
  {
    bool ok = true;
    for (const auto& mm : identity_corpus()) ok = ok && basis_poly(add_loop(mm)).terms() == basis_poly(mm).terms();
    out.push_back({"loop leaves the basis polynomial unchanged", ok, false, {}});
  }
  {
    const auto k4 = positroid_verdict(graphic(complete_graph(4)));
    out.push_back({"M(K4) is not a positroid", !k4.order.has_value(), false,
                   std::to_string(k4.orders_tried) + " orders searched"});
  }
  {
    bool ok = positroid_verdict(m).order && positroid_verdict(dual(m)).order;
    for (int e = 1; e <= m.size() && ok; ++e) {
      ok = positroid_verdict(deletion(m, bit_of(e)).matroid).order && positroid_verdict(contraction(m, bit_of(e)).matroid).order;
    }
    out.push_back({"M[125,356], its dual and single-element minors are positroids", ok, false, {}});
  }
  {
    long count = 0, bad = 0;
    for (int n = 2; n <= 7; ++n) {
      for (int r = 1; r < n; ++r) {
        sparse_paving_family(n, r, 400, [&](const Matroid& sp) {
          ++count;
          bad += neg_corr_all_pairs(sp).fails();
          return true;
        });
      }
    }
    out.push_back({"sparse paving matroids are negatively correlated", bad == 0, false,
                   std::to_string(count) + " classes, " + std::to_string(bad) + " failures"});
  }
  {
    const auto rep = nice_extension_report(m, all);
    FixtureResult r{"nice extension system for M[125,356], F=[6]", !rep.solution || rep.solution_verified, true, {}};
    r.detail = "k=" + std::to_string(rep.k) + ", uniform 1/k " + (rep.uniform_satisfies ? "satisfies" : "violates") +
               " the system, nonnegative solution " + (rep.solution ? "exists" : "does not exist");
    out.push_back(r);
  }
  {
    const BoundedPoly d = rayleigh_diff(basis_poly(uniform(2, 4)), 1, 2);
    std::string text = dump(d);
    const bool ok = text == "1 : x3^2\n1 : x3 x4\n1 : x4^2\n";
    std::replace(text.begin(), text.end(), '\n', ';');
    out.push_back({"U(2,4) Rayleigh difference", ok, false, text});
  }
  {
    const Matroid k4 = graphic(complete_graph(4));
    // K4 edges 12,13,14,23,24,34: the triangle 1-2-3 uses edges 1, 2, 4.
    const bool ok = is_isomorphic(relax(k4, subset_of({1, 2, 4})), whirl(3));
    out.push_back({"whirl W3 is M(K4) with a triangle relaxed", ok, false, {}});
  }
  (void)options.seed;
  return out;
}

}  // namespace matroidwb
