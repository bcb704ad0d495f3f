#include "matroidwb/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "matroidwb/linalg.hpp"

namespace matroidwb {

namespace {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

bool coefficients_nonnegative(const BoundedPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second >= 0; });
}

bool all_even(const BoundedPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.first.linear == 0; });
}

int tier_rank(CertificateKind k) {
  switch (k) {
    case CertificateKind::kAllOnesExact:
      return 1;
    case CertificateKind::kCoefficientNonneg:
      return 2;
    case CertificateKind::kSOSGram:
      return 3;
    default:
      return 0;
  }
}

// Decides p >= 0 on the domain through the three tiers.
Verdict tiered(const BoundedPoly& p, Domain domain, const AnalysisOptions& options, std::uint64_t seed) {
  Verdict v;
  v.seed = seed;
  v.tiers_run.push_back("coefficients");
  if (coefficients_nonnegative(p) && (domain == Domain::kPositiveOrthant || all_even(p))) {
    v.outcome = Outcome::kHolds;
    v.certificate = CertificateKind::kCoefficientNonneg;
    return v;
  }
  if (options.run_search) {
    v.tiers_run.push_back("search");
    SearchOptions so;
    so.domain = domain;
    so.budget = options.budget;
    so.seed = seed;
    so.tolerance = options.tolerance;
    SearchResult r = counterexample_search(p, so);
    v.best_value = r.best_value;
    if (r.witness) {
      v.outcome = Outcome::kFails;
      v.witness = std::move(r.witness);
      return v;
    }
  }
  if (options.run_sos) {
    v.tiers_run.push_back("sos");
    if (auto cert = sos_certificate(p, options.sos)) {
      v.outcome = Outcome::kHolds;
      v.certificate = CertificateKind::kSOSGram;
      v.gram = std::move(cert);
      return v;
    }
  }
  v.outcome = Outcome::kInconclusive;
  v.diagnostics = "no certificate and no witness";
  if (v.best_value) v.diagnostics += "; best normalized value " + std::to_string(*v.best_value);
  return v;
}

std::vector<Pair> pairs_of(int n, std::optional<Pair> pair) {
  if (pair) {
    if (pair->first == pair->second || pair->first < 1 || pair->second < 1 || pair->first > n || pair->second > n) {
      throw MatroidError(ErrorCode::kInvalidArgument, "pair must name two distinct variables");
    }
    return {*pair};
  }
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// Runs `make_poly` per pair and folds the per-pair verdicts: the first
// failure wins, otherwise Inconclusive beats Holds.
template <typename MakePoly>
Verdict over_pairs(const char* property, int n, std::optional<Pair> pair, Domain domain,
                   const AnalysisOptions& options, MakePoly&& make_poly) {
  Stopwatch clock;
  Verdict total;
  total.property = property;
  total.seed = options.seed;
  total.outcome = Outcome::kHolds;
  const auto pairs = pairs_of(n, pair);
  bool any_inconclusive = false;
  for (const auto& [i, j] : pairs) {
    Verdict v = tiered(make_poly(i, j), domain, options, mix_seed(options.seed, i, j));
    for (const auto& t : v.tiers_run) {
      if (std::find(total.tiers_run.begin(), total.tiers_run.end(), t) == total.tiers_run.end()) {
        total.tiers_run.push_back(t);
      }
    }
    if (v.best_value) total.best_value = std::min(total.best_value.value_or(*v.best_value), *v.best_value);
    if (v.fails()) {
      total.outcome = Outcome::kFails;
      total.certificate = CertificateKind::kNone;
      total.witness = std::move(v.witness);
      total.pair = Pair{i, j};
      total.gram.reset();
      total.wall_ms = clock.ms();
      return total;
    }
    if (v.outcome == Outcome::kInconclusive) {
      if (!any_inconclusive) {
        total.pair = Pair{i, j};
        total.diagnostics = "pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + v.diagnostics;
      }
      any_inconclusive = true;
      continue;
    }
    if (tier_rank(v.certificate) > tier_rank(total.certificate)) total.certificate = v.certificate;
    if (pairs.size() == 1) {
      total.gram = std::move(v.gram);
      total.pair = Pair{i, j};
    }
  }
  if (any_inconclusive) {
    total.outcome = Outcome::kInconclusive;
    total.certificate = CertificateKind::kNone;
    total.gram.reset();
  }
  total.wall_ms = clock.ms();
  return total;
}

void require_multi_affine(const BoundedPoly& f) {
  if (!f.is_multi_affine()) throw MatroidError(ErrorCode::kInvalidArgument, "polynomial is not multi-affine");
}

struct Counts {
  long n = 0;
  long single[kMaxElements] = {};
  long both[kMaxElements][kMaxElements] = {};
};

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(seed ^ splitmix(a)) ^ splitmix(b + 0x51ED270B27ull));
}

Verdict neg_corr(const Matroid& m, int e, int f) {
  Stopwatch clock;
  if (e == f || e < 1 || f < 1 || e > m.size() || f > m.size()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "neg_corr needs two distinct elements");
  }
  long n = 0, ne = 0, nf = 0, nef = 0;
  for (Subset b : m.bases()) {
    ++n;
    const bool in_e = contains(b, e), in_f = contains(b, f);
    ne += in_e;
    nf += in_f;
    nef += in_e && in_f;
  }
  Verdict v;
  v.property = "negcorr";
  v.pair = Pair{e, f};
  v.tiers_run = {"counts"};
  const Rational diff = Rational(ne) * nf - Rational(n) * nef;
  if (diff >= 0) {
    v.outcome = Outcome::kHolds;
    v.certificate = CertificateKind::kAllOnesExact;
  } else {
    v.outcome = Outcome::kFails;
    v.witness = Witness{std::vector<Rational>(m.size(), Rational(1)), diff};
  }
  v.wall_ms = clock.ms();
  return v;
}

Verdict neg_corr_all_pairs(const Matroid& m) {
  Stopwatch clock;
  for (int e = 1; e <= m.size(); ++e) {
    for (int f = e + 1; f <= m.size(); ++f) {
      Verdict v = neg_corr(m, e, f);
      if (v.fails()) {
        v.wall_ms = clock.ms();
        return v;
      }
    }
  }
  Verdict v;
  v.property = "negcorr";
  v.outcome = Outcome::kHolds;
  v.certificate = CertificateKind::kAllOnesExact;
  v.tiers_run = {"counts"};
  v.wall_ms = clock.ms();
  return v;
}

Verdict is_balanced(const Matroid& m) {
  Stopwatch clock;
  Verdict v;
  v.property = "balanced";
  v.tiers_run = {"minors"};
  const Subset full = m.ground_set();
  std::vector<Subset> with_c;
  for (Subset c = 0; c <= full; ++c) {
    with_c.clear();
    for (Subset b : m.bases()) {
      if ((b & c) == c) with_c.push_back(b);
    }
    if (with_c.empty()) continue;
    const Subset rest = full & ~c;
    for (Subset d = rest;; d = (d - 1) & rest) {
      Counts k;
      for (Subset b : with_c) {
        if (b & d) continue;
        ++k.n;
        const auto els = elements_of(b & ~c);
        for (std::size_t x = 0; x < els.size(); ++x) {
          ++k.single[els[x] - 1];
          for (std::size_t y = x + 1; y < els.size(); ++y) ++k.both[els[x] - 1][els[y] - 1];
        }
      }
      if (k.n > 0) {
        const auto live = elements_of(full & ~c & ~d);
        for (std::size_t x = 0; x < live.size(); ++x) {
          for (std::size_t y = x + 1; y < live.size(); ++y) {
            const int e = live[x], f = live[y];
            const Rational diff = Rational(k.single[e - 1]) * k.single[f - 1] - Rational(k.n) * k.both[e - 1][f - 1];
            if (diff < 0) {
              v.outcome = Outcome::kFails;
              v.pair = Pair{e, f};
              v.sets = std::make_pair(c, d);
              v.witness = Witness{{}, diff};
              v.diagnostics = "minor M/" + to_string(c) + "\\" + to_string(d) + " is not negatively correlated";
              v.wall_ms = clock.ms();
              return v;
            }
          }
        }
      }
      if (d == 0) break;
    }
  }
  v.outcome = Outcome::kHolds;
  v.certificate = CertificateKind::kAllOnesExact;
  v.wall_ms = clock.ms();
  return v;
}

Verdict rayleigh_verdict(const BoundedPoly& f, std::optional<Pair> pair, const AnalysisOptions& options) {
  require_multi_affine(f);
  return over_pairs("rayleigh", f.num_vars(), pair, Domain::kPositiveOrthant, options,
                    [&](int i, int j) { return rayleigh_diff(f, i, j); });
}

Verdict strong_rayleigh_verdict(const BoundedPoly& f, std::optional<Pair> pair, const AnalysisOptions& options) {
  require_multi_affine(f);
  return over_pairs("strong_rayleigh", f.num_vars(), pair, Domain::kAllReals, options,
                    [&](int i, int j) { return rayleigh_diff(f, i, j); });
}

Verdict c_rayleigh_verdict(const BoundedPoly& f, const Rational& c, std::optional<Pair> pair,
                           const AnalysisOptions& options) {
  require_multi_affine(f);
  if (c <= 0) throw MatroidError(ErrorCode::kInvalidArgument, "c must be positive");
  Verdict v;
  if (c == 1) {
    v = rayleigh_verdict(f, pair, options);
    v.property = "c_rayleigh";
  } else {
    v = over_pairs("c_rayleigh", f.num_vars(), pair, Domain::kPositiveOrthant, options,
                   [&](int i, int j) { return scaled_rayleigh_diff(f, i, j, c); });
  }
  v.c = c;
  return v;
}

MinCEstimate min_c_estimate(const BoundedPoly& f_in, long samples, std::uint64_t seed) {
  require_multi_affine(f_in);
  MinCEstimate est;
  est.bound = 0;
  if (f_in.is_zero()) return est;
  // Normalizing makes the estimate exactly scale invariant.
  const BoundedPoly f = f_in.scaled(1 / f_in.terms().front().second);
  const int n = f.num_vars();
  struct PairPolys {
    int i, j;
    FloatPoly di, dj, dij;
  };
  std::vector<PairPolys> polys;
  for (int i = 1; i <= n; ++i) {
    const BoundedPoly fi = derivative(f, i);
    for (int j = i + 1; j <= n; ++j) {
      const BoundedPoly fij = derivative(fi, j);
      if (fij.is_zero()) continue;
      polys.push_back({i, j, FloatPoly(fi), FloatPoly(derivative(f, j)), FloatPoly(fij)});
    }
  }
  if (polys.empty()) return est;
  const FloatPoly ff(f);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Rational> point(n);
  std::vector<double> x(n);
  double best = -1;
  for (long s = 0; s < samples; ++s) {
    for (int k = 0; k < n; ++k) {
      point[k] = s == 0 ? Rational(1) : rationalize(std::exp(normal(rng)), 64);
      if (point[k] <= 0) point[k] = Rational(1) / 64;
      x[k] = point[k].get_d();
    }
    const double fv = ff.value(x.data());
    for (const auto& pp : polys) {
      const double denom = pp.di.value(x.data()) * pp.dj.value(x.data());
      if (!(denom > 0)) continue;
      const double ratio = pp.dij.value(x.data()) * fv / denom;
      if (ratio > best) {
        best = ratio;
        est.pair = Pair{pp.i, pp.j};
        est.point = point;
      }
    }
    ++est.samples;
  }
  if (est.pair) {
    const auto [i, j] = *est.pair;
    const BoundedPoly fi = derivative(f, i), fj = derivative(f, j);
    est.bound = evaluate(derivative(fi, j), est.point) * evaluate(f, est.point) /
                (evaluate(fi, est.point) * evaluate(fj, est.point));
  }
  return est;
}

std::optional<Pair> designated_pair(const Matroid& m) {
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = i + 1; j <= m.size(); ++j) {
      const Subset both = bit_of(i) | bit_of(j);
      for (Subset b : m.bases()) {
        if ((b & both) == both) return Pair{i, j};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Fails beats Inconclusive beats Holds.
std::optional<Outcome> worse(std::optional<Outcome> a, std::optional<Outcome> b) {
  if (!a) return b;
  if (!b) return a;
  auto rank = [](Outcome o) { return o == Outcome::kFails ? 2 : (o == Outcome::kInconclusive ? 1 : 0); };
  return rank(*a) >= rank(*b) ? a : b;
}

Verdict hpp_connected(const Matroid& m, const HppOptions& options) {
  Verdict v;
  v.property = "hpp";
  v.seed = options.seed;
  if (m.size() <= 1 || m.rank() == 0 || m.rank() == m.size()) {
    v.outcome = Outcome::kHolds;
    v.certificate = CertificateKind::kSinglePairWagner;
    v.inner_certificate = CertificateKind::kCoefficientNonneg;
    v.tiers_run = {"coefficients"};
    return v;
  }
  const BoundedPoly f = basis_poly(m);
  const Pair pair = designated_pair(m).value_or(Pair{1, 2});
  Verdict single = strong_rayleigh_verdict(f, pair, options);
  v.pair = pair;
  v.single_pair = single.outcome;
  v.tiers_run = single.tiers_run;
  v.best_value = single.best_value;
  v.diagnostics = single.diagnostics;
  if (single.holds()) {
    v.outcome = Outcome::kHolds;
    v.certificate = CertificateKind::kSinglePairWagner;
    v.inner_certificate = single.certificate;
    v.gram = std::move(single.gram);
  } else {
    v.outcome = single.outcome;
    v.witness = std::move(single.witness);
  }
  if (options.cross_check_all_pairs) {
    Verdict all = strong_rayleigh_verdict(f, std::nullopt, options);
    v.cross_check = all.outcome;
    v.tiers_run.push_back("cross-check");
    if (all.fails() && !v.fails()) {
      // A refutation at any pair refutes stability.
      v.diagnostics = "designated pair verdict " + std::string(outcome_name(v.outcome)) +
                      " contradicted by pair (" + std::to_string(all.pair->first) + "," +
                      std::to_string(all.pair->second) + ")";
      v.outcome = Outcome::kFails;
      v.certificate = CertificateKind::kNone;
      v.inner_certificate = CertificateKind::kNone;
      v.gram.reset();
      v.pair = all.pair;
      v.witness = std::move(all.witness);
    }
  }
  return v;
}

}  // namespace

Verdict hpp_verdict(const Matroid& m, const HppOptions& options) {
  Stopwatch clock;
  const auto comps = components(m);
  if (comps.size() <= 1) {
    Verdict v = hpp_connected(m, options);
    v.wall_ms = clock.ms();
    return v;
  }
  Verdict total;
  total.property = "hpp";
  total.seed = options.seed;
  total.outcome = Outcome::kHolds;
  total.certificate = CertificateKind::kSinglePairWagner;
  total.tiers_run = {"components"};
  bool inconclusive = false;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Minor part = restriction(m, comps[c]);
    HppOptions sub = options;
    sub.seed = mix_seed(options.seed, 0xC0, c);
    Verdict v = hpp_connected(part.matroid, sub);
    for (const auto& t : v.tiers_run) {
      if (std::find(total.tiers_run.begin(), total.tiers_run.end(), t) == total.tiers_run.end()) {
        total.tiers_run.push_back(t);
      }
    }
    total.single_pair = worse(total.single_pair, v.single_pair);
    total.cross_check = worse(total.cross_check, v.cross_check);
    if (tier_rank(v.inner_certificate) > tier_rank(total.inner_certificate)) {
      total.inner_certificate = v.inner_certificate;
    }
    if (v.fails()) {
      // Lift the witness: Delta_ij(f g) = g^2 Delta_ij(f), and g(1) > 0.
      const int i = part.labels[v.pair->first - 1], j = part.labels[v.pair->second - 1];
      std::vector<Rational> point(m.size(), Rational(1));
      for (std::size_t k = 0; k < part.labels.size(); ++k) point[part.labels[k] - 1] = v.witness->point[k];
      total.outcome = Outcome::kFails;
      total.certificate = CertificateKind::kNone;
      total.inner_certificate = CertificateKind::kNone;
      total.pair = Pair{i, j};
      total.witness = Witness{point, evaluate(rayleigh_diff(basis_poly(m), i, j), point)};
      total.diagnostics = "component " + to_string(comps[c]);
      total.wall_ms = clock.ms();
      return total;
    }
    if (v.outcome == Outcome::kInconclusive && !inconclusive) {
      inconclusive = true;
      total.diagnostics = "component " + to_string(comps[c]) + ": " + v.diagnostics;
    }
  }
  if (inconclusive) {
    total.outcome = Outcome::kInconclusive;
    total.certificate = CertificateKind::kNone;
    total.inner_certificate = CertificateKind::kNone;
  }
  total.wall_ms = clock.ms();
  return total;
}

Verdict nlc_check(const Measure& mu) {
  Stopwatch clock;
  mu.validate();
  Verdict v;
  v.property = "nlc";
  v.tiers_run = {"lattice"};
  auto weight = [&](Subset s) {
    auto it = mu.weights.find(s);
    return it == mu.weights.end() ? Rational(0) : it->second;
  };
  for (const auto& [x, wx] : mu.weights) {
    for (const auto& [y, wy] : mu.weights) {
      if ((y & x) != y) continue;  // y = S n T must sit inside x = S u T
      const Rational rhs = wx * wy;
      const Subset free = x & ~y;
      for (Subset part = free;; part = (part - 1) & free) {
        const Subset s = y | part;
        const Subset t = y | (free & ~part);
        const Rational diff = weight(s) * weight(t) - rhs;
        if (diff < 0) {
          v.outcome = Outcome::kFails;
          v.sets = std::make_pair(s, t);
          v.witness = Witness{{}, diff};
          v.wall_ms = clock.ms();
          return v;
        }
        if (part == 0) break;
      }
    }
  }
  v.outcome = Outcome::kHolds;
  v.certificate = CertificateKind::kCoefficientNonneg;
  v.wall_ms = clock.ms();
  return v;
}

namespace {

struct ExtensionSystem {
  std::vector<int> columns;  // elements of F
  std::vector<Subset> rows;  // truncation bases
  RationalMatrix a;
};

ExtensionSystem extension_system(const Matroid& m, Subset f) {
  const Matroid tr = principal_truncation(m, f);
  ExtensionSystem sys;
  sys.columns = elements_of(f & m.ground_set());
  for (Subset b : tr.bases()) {
    std::vector<Rational> row(sys.columns.size(), Rational(0));
    for (std::size_t k = 0; k < sys.columns.size(); ++k) {
      const int e = sys.columns[k];
      if (!contains(b, e) && m.is_basis(b | bit_of(e))) row[k] = 1;
    }
    sys.rows.push_back(b);
    sys.a.push_back(std::move(row));
  }
  return sys;
}

bool satisfies(const ExtensionSystem& sys, const std::vector<Rational>& x) {
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : sys.a) {
    Rational sum = 0;
    for (std::size_t k = 0; k < row.size(); ++k) sum += row[k] * x[k];
    if (sum != 1) return false;
  }
  return true;
}

}  // namespace

std::optional<std::map<int, Rational>> nice_extension_weights(const Matroid& m, Subset f) {
  const ExtensionSystem sys = extension_system(m, f);
  auto x = nonnegative_solution(sys.a, std::vector<Rational>(sys.a.size(), Rational(1)));
  if (!x || !satisfies(sys, *x)) return std::nullopt;
  std::map<int, Rational> out;
  for (std::size_t k = 0; k < sys.columns.size(); ++k) out[sys.columns[k]] = (*x)[k];
  return out;
}

NiceExtensionReport nice_extension_report(const Matroid& m, Subset f) {
  const ExtensionSystem sys = extension_system(m, f);
  NiceExtensionReport rep;
  rep.f = f;
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    int count = 0;
    for (std::size_t k = 0; k < sys.columns.size(); ++k) {
      if (sys.a[r][k] != 0) {
        ++count;
        rep.extenders |= bit_of(sys.columns[k]);
      }
    }
    rep.equations.emplace_back(sys.rows[r], count);
  }
  rep.k = popcount(rep.extenders);
  if (rep.k > 0) {
    std::vector<Rational> uniform(sys.columns.size(), Rational(0));
    for (std::size_t k = 0; k < sys.columns.size(); ++k) {
      if (contains(rep.extenders, sys.columns[k])) uniform[k] = Rational(1) / rep.k;
    }
    rep.uniform_satisfies = satisfies(sys, uniform);
  }
  auto x = nonnegative_solution(sys.a, std::vector<Rational>(sys.a.size(), Rational(1)));
  if (x) {
    rep.solution_verified = satisfies(sys, *x);
    std::map<int, Rational> out;
    for (std::size_t k = 0; k < sys.columns.size(); ++k) out[sys.columns[k]] = (*x)[k];
    rep.solution = std::move(out);
  }
  return rep;
}

}  // namespace matroidwb
