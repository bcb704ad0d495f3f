#include "matroidwb/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace matroidwb {

bool multiply_monomials(const Monomial& a, const Monomial& b, Monomial& out) {
  if ((a.squared & b.variables()) || (b.squared & a.variables())) return false;
  out.linear = a.linear ^ b.linear;
  out.squared = a.squared | b.squared | (a.linear & b.linear);
  return true;
}

BoundedPoly BoundedPoly::from_terms(int n, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  BoundedPoly p(n);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
  return p;
}

BoundedPoly BoundedPoly::constant(int n, const Rational& c) { return from_terms(n, {{Monomial{}, c}}); }

BoundedPoly BoundedPoly::variable(int n, int var) { return from_terms(n, {{Monomial{bit_of(var), 0}, Rational(1)}}); }

bool BoundedPoly::is_multi_affine() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.squared == 0; });
}

Subset BoundedPoly::active_variables() const {
  Subset s = 0;
  for (const auto& t : terms_) s |= t.first.variables();
  return s;
}

int BoundedPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

int BoundedPoly::min_degree() const {
  if (terms_.empty()) return -1;
  int d = 1 << 20;
  for (const auto& t : terms_) d = std::min(d, t.first.degree());
  return d;
}

Rational BoundedPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

BoundedPoly BoundedPoly::operator+(const BoundedPoly& other) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(std::max(n_, other.n_), std::move(all));
}

BoundedPoly BoundedPoly::operator-() const {
  BoundedPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

BoundedPoly BoundedPoly::operator-(const BoundedPoly& other) const { return *this + (-other); }

BoundedPoly BoundedPoly::scaled(const Rational& c) const {
  if (c == 0) return BoundedPoly(n_);
  BoundedPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

BoundedPoly basis_poly(const Matroid& m) {
  std::vector<BoundedPoly::Term> terms;
  terms.reserve(m.num_bases());
  for (Subset b : m.bases()) terms.emplace_back(Monomial{b, 0}, Rational(1));
  return BoundedPoly::from_terms(m.size(), std::move(terms));
}

BoundedPoly derivative(const BoundedPoly& f, int var) {
  std::vector<BoundedPoly::Term> terms;
  const Subset b = bit_of(var);
  for (const auto& [mono, c] : f.terms()) {
    if (mono.linear & b) {
      terms.emplace_back(Monomial{mono.linear & ~b, mono.squared}, c);
    } else if (mono.squared & b) {
      terms.emplace_back(Monomial{mono.linear | b, mono.squared & ~b}, Rational(2 * c));
    }
  }
  return BoundedPoly::from_terms(f.num_vars(), std::move(terms));
}

BoundedPoly multiply(const BoundedPoly& f, const BoundedPoly& g) {
  std::unordered_map<std::uint64_t, std::pair<Monomial, Rational>> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& [ma, ca] : f.terms()) {
    for (const auto& [mb, cb] : g.terms()) {
      Monomial prod;
      if (!multiply_monomials(ma, mb, prod)) {
        throw MatroidError(ErrorCode::kDegreeOverflow, "product has a variable of degree above 2");
      }
      auto [it, inserted] = acc.try_emplace(prod.key(), prod, Rational(0));
      it->second.second += ca * cb;
    }
  }
  std::vector<BoundedPoly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [key, term] : acc) terms.push_back(std::move(term));
  return BoundedPoly::from_terms(std::max(f.num_vars(), g.num_vars()), std::move(terms));
}

Rational evaluate(const BoundedPoly& f, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) < f.num_vars()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "point has fewer coordinates than variables");
  }
  Rational total = 0;
  Rational term;
  for (const auto& [mono, c] : f.terms()) {
    term = c;
    for (Subset s = mono.linear; s; s &= s - 1) term *= point[std::countr_zero(s)];
    for (Subset s = mono.squared; s; s &= s - 1) {
      const Rational& x = point[std::countr_zero(s)];
      term *= x;
      term *= x;
    }
    total += term;
  }
  return total;
}

double evaluate_float(const BoundedPoly& f, const std::vector<double>& point) {
  if (static_cast<int>(point.size()) < f.num_vars()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "point has fewer coordinates than variables");
  }
  double total = 0;
  for (const auto& [mono, c] : f.terms()) {
    double term = c.get_d();
    for (Subset s = mono.linear; s; s &= s - 1) term *= point[std::countr_zero(s)];
    for (Subset s = mono.squared; s; s &= s - 1) {
      const double x = point[std::countr_zero(s)];
      term *= x * x;
    }
    total += term;
  }
  return total;
}

PairSplit split_pair(const BoundedPoly& f, int i, int j) {
  if (!f.is_multi_affine()) throw MatroidError(ErrorCode::kInvalidArgument, "Rayleigh difference needs a multi-affine polynomial");
  if (i == j) throw MatroidError(ErrorCode::kInvalidArgument, "Rayleigh difference needs distinct variables");
  const Subset bi = bit_of(i), bj = bit_of(j);
  std::vector<BoundedPoly::Term> both, only_i, only_j, neither;
  for (const auto& [mono, c] : f.terms()) {
    const Monomial rest{mono.linear & ~(bi | bj), 0};
    const bool has_i = mono.linear & bi, has_j = mono.linear & bj;
    if (has_i && has_j) both.emplace_back(rest, c);
    else if (has_i) only_i.emplace_back(rest, c);
    else if (has_j) only_j.emplace_back(rest, c);
    else neither.emplace_back(rest, c);
  }
  const int n = f.num_vars();
  return {BoundedPoly::from_terms(n, std::move(both)), BoundedPoly::from_terms(n, std::move(only_i)),
          BoundedPoly::from_terms(n, std::move(only_j)), BoundedPoly::from_terms(n, std::move(neither))};
}

BoundedPoly rayleigh_diff(const BoundedPoly& f, int i, int j) {
  const PairSplit s = split_pair(f, i, j);
  return multiply(s.only_i, s.only_j) - multiply(s.both, s.neither);
}

BoundedPoly scaled_rayleigh_diff(const BoundedPoly& f, int i, int j, const Rational& c) {
  if (!f.is_multi_affine()) throw MatroidError(ErrorCode::kInvalidArgument, "needs a multi-affine polynomial");
  return multiply(derivative(f, i), derivative(f, j)).scaled(c) - multiply(derivative(derivative(f, i), j), f);
}

std::string dump(const BoundedPoly& f) {
  std::vector<const BoundedPoly::Term*> order;
  for (const auto& t : f.terms()) order.push_back(&t);
  const int n = f.num_vars();
  std::sort(order.begin(), order.end(), [n](const BoundedPoly::Term* a, const BoundedPoly::Term* b) {
    for (int v = 1; v <= n; ++v) {
      const int ea = a->first.exponent(v), eb = b->first.exponent(v);
      if (ea != eb) return ea > eb;
    }
    return false;
  });
  std::ostringstream out;
  for (const auto* t : order) {
    out << format_rational(t->second) << " :";
    if (t->first.variables() == 0) out << " 1";
    for (int v = 1; v <= n; ++v) {
      const int e = t->first.exponent(v);
      if (e == 1) out << " x" << v;
      if (e == 2) out << " x" << v << "^2";
    }
    out << "\n";
  }
  return out.str();
}

void Measure::validate() const {
  if (n < 0 || n > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "measure ground set outside [0,16]");
  Rational total = 0;
  for (const auto& [s, w] : weights) {
    if (w < 0) throw MatroidError(ErrorCode::kNotAProbabilityPolynomial, "negative weight on " + to_string(s));
    if (s & ~full_set(n)) throw MatroidError(ErrorCode::kInvalidArgument, "subset outside [n]");
    total += w;
  }
  if (total != 1) throw MatroidError(ErrorCode::kNotAProbabilityPolynomial, "weights sum to " + format_rational(total));
}

BoundedPoly generating_poly(const Measure& mu) {
  mu.validate();
  std::vector<BoundedPoly::Term> terms;
  for (const auto& [s, w] : mu.weights) terms.emplace_back(Monomial{s, 0}, w);
  return BoundedPoly::from_terms(mu.n, std::move(terms));
}

Measure measure_from_poly(const BoundedPoly& f) {
  if (!f.is_multi_affine()) throw MatroidError(ErrorCode::kNotAProbabilityPolynomial, "polynomial is not multi-affine");
  Measure mu{f.num_vars(), {}};
  Rational total = 0;
  for (const auto& [mono, c] : f.terms()) {
    if (c < 0) throw MatroidError(ErrorCode::kNotAProbabilityPolynomial, "negative coefficient");
    mu.weights[mono.linear] = c;
    total += c;
  }
  if (total != 1) throw MatroidError(ErrorCode::kNotAProbabilityPolynomial, "f(1) = " + format_rational(total));
  return mu;
}

Measure uniform_basis_measure(const Matroid& m) {
  Measure mu{m.size(), {}};
  const Rational w = Rational(1) / Rational(static_cast<long>(m.num_bases()));
  for (Subset b : m.bases()) mu.weights[b] = w;
  return mu;
}

namespace {

void check_weights(const MultiGraph& g, const EdgeWeights& lambda) {
  g.validate();
  if (static_cast<int>(lambda.size()) != g.num_edges()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "need one weight per edge");
  }
  for (const auto& w : lambda) {
    if (w < 0) throw MatroidError(ErrorCode::kInvalidArgument, "edge weights must be nonnegative");
  }
  for (const auto& [u, w] : g.edges) {
    if (u == w) throw MatroidError(ErrorCode::kLoopPresent, "loop at vertex " + std::to_string(u));
  }
}

// Calls fn(covered vertex set, product of weights) for every matching,
// including the empty one.
void for_each_matching(const MultiGraph& g, const EdgeWeights& lambda,
                       const std::function<void(Subset, const Rational&)>& fn) {
  auto rec = [&](auto&& self, int e, Subset covered, const Rational& weight) -> void {
    if (e == g.num_edges()) {
      fn(covered, weight);
      return;
    }
    self(self, e + 1, covered, weight);
    const auto [u, w] = g.edges[e];
    const Subset uw = bit_of(u) | bit_of(w);
    if (!(covered & uw)) self(self, e + 1, covered | uw, weight * lambda[e]);
  };
  rec(rec, 0, 0, Rational(1));
}

void check_bipartition(const MultiGraph& g, Subset side_a) {
  for (const auto& [u, w] : g.edges) {
    if (contains(side_a, u) == contains(side_a, w)) {
      throw MatroidError(ErrorCode::kNotBipartite,
                         "edge (" + std::to_string(u) + "," + std::to_string(w) + ") does not cross the bipartition");
    }
  }
}

}  // namespace

BoundedPoly matching_poly(const MultiGraph& g, const EdgeWeights& lambda) {
  check_weights(g, lambda);
  std::vector<BoundedPoly::Term> terms;
  for_each_matching(g, lambda, [&](Subset covered, const Rational& w) { terms.emplace_back(Monomial{covered, 0}, w); });
  return BoundedPoly::from_terms(g.num_vertices, std::move(terms));
}

BoundedPoly complementary_matching_poly(const MultiGraph& g, const EdgeWeights& lambda) {
  check_weights(g, lambda);
  const Subset all = full_set(g.num_vertices);
  std::vector<BoundedPoly::Term> terms;
  for_each_matching(g, lambda, [&](Subset covered, const Rational& w) { terms.emplace_back(Monomial{all & ~covered, 0}, w); });
  return BoundedPoly::from_terms(g.num_vertices, std::move(terms));
}

BoundedPoly restricted_matching_poly(const MultiGraph& g, Subset side_a, const EdgeWeights& lambda) {
  check_weights(g, lambda);
  check_bipartition(g, side_a);
  std::vector<BoundedPoly::Term> terms;
  for_each_matching(g, lambda, [&](Subset covered, const Rational& w) { terms.emplace_back(Monomial{covered & side_a, 0}, w); });
  return BoundedPoly::from_terms(g.num_vertices, std::move(terms));
}

std::map<Subset, Rational> c_weights(const MultiGraph& g, Subset side_a, const EdgeWeights& lambda) {
  check_weights(g, lambda);
  check_bipartition(g, side_a);
  std::map<Subset, Rational> out;
  for_each_matching(g, lambda, [&](Subset covered, const Rational& w) { out[covered & side_a] += w; });
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::vector<std::vector<int>> determinantal_rep_graphic(const MultiGraph& g) {
  g.validate();
  for (const auto& [u, w] : g.edges) {
    if (u == w) throw MatroidError(ErrorCode::kLoopPresent, "loop at vertex " + std::to_string(u));
  }
  const int v = g.num_vertices;
  std::vector<int> parent(v + 1);
  for (int x = 0; x <= v; ++x) parent[x] = x;
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& [a, b] : g.edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Root of each component is its smallest vertex; the remaining vertices index rows.
  std::vector<int> row(v + 1, -1);
  int dim = 0;
  for (int x = 1; x <= v; ++x) {
    if (find(x) != x) row[x] = dim++;
  }
  std::vector<std::vector<int>> out;
  for (const auto& [a, b] : g.edges) {
    std::vector<int> col(dim, 0);
    if (row[a] >= 0) col[row[a]] += 1;
    if (row[b] >= 0) col[row[b]] -= 1;
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace matroidwb
