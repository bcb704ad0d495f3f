#include "matroidwb/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace matroidwb {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyBases: return "EmptyBases";
    case ErrorCode::kMixedCardinality: return "MixedCardinality";
    case ErrorCode::kExchangeViolation: return "ExchangeViolation";
    case ErrorCode::kBasepointIsSeparator: return "BasepointIsSeparator";
    case ErrorCode::kNotCircuitHyperplane: return "NotCircuitHyperplane";
    case ErrorCode::kPathViolation: return "PathViolation";
    case ErrorCode::kFDisjointFromAllBases: return "FDisjointFromAllBases";
    case ErrorCode::kDependentGeneratorSet: return "DependentGeneratorSet";
    case ErrorCode::kUnknownName: return "UnknownName";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kNotAProbabilityPolynomial: return "NotAProbabilityPolynomial";
    case ErrorCode::kLoopPresent: return "LoopPresent";
    case ErrorCode::kNotBipartite: return "NotBipartite";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void canonicalize(std::vector<Subset>& bases) {
  std::sort(bases.begin(), bases.end(), canonical_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

}  // namespace

Matroid::Matroid(int n, std::vector<Subset> bases) : n_(n), bases_(std::move(bases)) {
  canonicalize(bases_);
  r_ = bases_.empty() ? 0 : popcount(bases_.front());
  table_.assign(((std::size_t{1} << n_) + 63) / 64, 0);
  for (Subset b : bases_) table_[b >> 6] |= std::uint64_t{1} << (b & 63);
}

Matroid Matroid::trusted(int n, std::vector<Subset> bases) {
  if (n < 0 || n > kMaxElements) {
    throw MatroidError(ErrorCode::kInvalidArgument, "ground set size " + std::to_string(n) + " outside [0,16]");
  }
  if (bases.empty()) throw MatroidError(ErrorCode::kEmptyBases, "a matroid needs at least one basis");
  return Matroid(n, std::move(bases));
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  if (n < 1 || n > kMaxElements) {
    throw MatroidError(ErrorCode::kInvalidArgument, "ground set size " + std::to_string(n) + " outside [1,16]");
  }
  if (bases.empty()) throw MatroidError(ErrorCode::kEmptyBases, "a matroid needs at least one basis");
  const Subset ground = full_set(n);
  for (Subset b : bases) {
    if (b & ~ground) {
      throw MatroidError(ErrorCode::kInvalidArgument, "basis " + to_string(b) + " is not a subset of [" + std::to_string(n) + "]");
    }
  }
  const int r = popcount(bases.front());
  for (Subset b : bases) {
    if (popcount(b) != r) {
      throw MatroidError(ErrorCode::kMixedCardinality,
                         "basis " + to_string(b) + " has " + std::to_string(popcount(b)) + " elements, expected " + std::to_string(r));
    }
  }
  canonicalize(bases);
  if (auto bad = find_exchange_violation(n, bases)) {
    throw MatroidError(ErrorCode::kExchangeViolation,
                       "I=" + to_string(bad->I) + " J=" + to_string(bad->J) + " a=" + std::to_string(bad->a));
  }
  return Matroid(n, std::move(bases));
}

Subset Matroid::support() const {
  Subset s = 0;
  for (Subset b : bases_) s |= b;
  return s;
}

Subset Matroid::coloops() const {
  Subset s = ground_set();
  for (Subset b : bases_) s &= b;
  return s;
}

std::optional<ExchangeFailure> find_exchange_violation(int n, const std::vector<Subset>& bases) {
  std::vector<std::uint64_t> table(((std::size_t{1} << n) + 63) / 64, 0);
  for (Subset b : bases) table[b >> 6] |= std::uint64_t{1} << (b & 63);
  auto is_basis = [&](Subset s) { return (table[s >> 6] >> (s & 63)) & 1u; };
  for (Subset I : bases) {
    for (Subset J : bases) {
      if (I == J) continue;
      Subset only_i = I & ~J;
      while (only_i) {
        const Subset a = only_i & (~only_i + 1);
        only_i &= only_i - 1;
        bool found = false;
        Subset only_j = J & ~I;
        while (only_j && !found) {
          const Subset b = only_j & (~only_j + 1);
          only_j &= only_j - 1;
          found = is_basis((I & ~a) | b);
        }
        if (!found) return ExchangeFailure{I, J, std::countr_zero(a) + 1};
      }
    }
  }
  return std::nullopt;
}

int rank_of(const Matroid& m, Subset s) {
  int best = 0;
  for (Subset b : m.bases()) {
    best = std::max(best, popcount(b & s));
    if (best == m.rank()) break;
  }
  return best;
}

bool is_independent(const Matroid& m, Subset s) { return rank_of(m, s) == popcount(s); }

Subset closure(const Matroid& m, Subset s) {
  const int r = rank_of(m, s);
  Subset cl = s;
  for (int e = 1; e <= m.size(); ++e) {
    if (!contains(s, e) && rank_of(m, s | bit_of(e)) == r) cl |= bit_of(e);
  }
  return cl;
}

std::vector<std::uint8_t> rank_table(const Matroid& m) {
  const int n = m.size();
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(total, 0);
  for (Subset b : m.bases()) indep[b] = 1;
  // Downward closure, largest sets first.
  for (std::size_t s = total; s-- > 0;) {
    if (indep[s]) continue;
    if (popcount(static_cast<Subset>(s)) >= m.rank()) continue;
    for (int e = 0; e < n; ++e) {
      const std::size_t t = s | (std::size_t{1} << e);
      if (t != s && indep[t]) {
        indep[s] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> rank(total, 0);
  for (std::size_t s = 1; s < total; ++s) {
    if (indep[s]) {
      rank[s] = static_cast<std::uint8_t>(popcount(static_cast<Subset>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (int e = 0; e < n; ++e) {
      if (s & (std::size_t{1} << e)) best = std::max(best, rank[s & ~(std::size_t{1} << e)]);
    }
    rank[s] = best;
  }
  return rank;
}

CircuitSet circuits(const Matroid& m) {
  const auto rank = rank_table(m);
  CircuitSet out{m.size(), {}};
  const std::size_t total = std::size_t{1} << m.size();
  for (std::size_t s = 1; s < total; ++s) {
    const Subset set = static_cast<Subset>(s);
    const int k = popcount(set);
    if (rank[s] == k) continue;
    if (rank[s] != k - 1) continue;
    bool minimal = true;
    for (Subset rest = set; rest && minimal; rest &= rest - 1) {
      const Subset e = rest & (~rest + 1);
      minimal = rank[set & ~e] == k - 1;
    }
    if (minimal) out.circuits.push_back(set);
  }
  std::sort(out.circuits.begin(), out.circuits.end(), canonical_less);
  return out;
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.num_bases());
  for (Subset b : m.bases()) bases.push_back(m.ground_set() & ~b);
  return Matroid::trusted(m.size(), std::move(bases));
}

namespace {

// Compresses the bits of s that lie in keep into consecutive low bits.
Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int k = 0;
  for (Subset rest = keep; rest; rest &= rest - 1) {
    const Subset b = rest & (~rest + 1);
    if (s & b) out |= Subset{1} << k;
    ++k;
  }
  return out;
}

Minor make_minor(const Matroid& m, Subset keep, const std::vector<Subset>& bases_in_keep) {
  std::vector<Subset> bases;
  bases.reserve(bases_in_keep.size());
  for (Subset b : bases_in_keep) bases.push_back(compress(b, keep));
  std::vector<int> labels = elements_of(keep);
  (void)m;
  return Minor{Matroid::trusted(popcount(keep), std::move(bases)), std::move(labels)};
}

}  // namespace

Minor deletion(const Matroid& m, Subset s) {
  s &= m.ground_set();
  const Subset keep = m.ground_set() & ~s;
  int best = 0;
  for (Subset b : m.bases()) best = std::max(best, popcount(b & keep));
  std::vector<Subset> kept;
  for (Subset b : m.bases()) {
    if (popcount(b & keep) == best) kept.push_back(b & keep);
  }
  return make_minor(m, keep, kept);
}

Minor contraction(const Matroid& m, Subset s) {
  s &= m.ground_set();
  const Subset keep = m.ground_set() & ~s;
  const int rs = rank_of(m, s);
  std::vector<Subset> kept;
  for (Subset b : m.bases()) {
    if (popcount(b & s) == rs) kept.push_back(b & keep);
  }
  return make_minor(m, keep, kept);
}

Minor restriction(const Matroid& m, Subset s) { return deletion(m, m.ground_set() & ~s); }

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.size() + b.size() > kMaxElements) {
    throw MatroidError(ErrorCode::kInvalidArgument, "direct sum exceeds 16 elements");
  }
  std::vector<Subset> bases;
  bases.reserve(a.num_bases() * b.num_bases());
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) bases.push_back(x | (y << a.size()));
  }
  return Matroid::trusted(a.size() + b.size(), std::move(bases));
}

Matroid two_sum(const Matroid& a, int p, const Matroid& b, int q) {
  if (a.size() < 2 || b.size() < 2) {
    throw MatroidError(ErrorCode::kInvalidArgument, "2-sum needs at least two elements on each side");
  }
  if (p < 1 || p > a.size() || q < 1 || q > b.size()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "basepoint outside the ground set");
  }
  auto separator = [](const Matroid& m, int e) {
    return !contains(m.support(), e) || contains(m.coloops(), e);
  };
  if (separator(a, p)) throw MatroidError(ErrorCode::kBasepointIsSeparator, "p=" + std::to_string(p) + " is a loop or coloop");
  if (separator(b, q)) throw MatroidError(ErrorCode::kBasepointIsSeparator, "q=" + std::to_string(q) + " is a loop or coloop");
  const int n = a.size() + b.size() - 2;
  if (n > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "2-sum exceeds 16 elements");

  const Subset keep_a = a.ground_set() & ~bit_of(p);
  const Subset keep_b = b.ground_set() & ~bit_of(q);
  const int shift = a.size() - 1;
  auto map_a = [&](Subset s) { return compress(s & keep_a, keep_a); };
  auto map_b = [&](Subset s) { return compress(s & keep_b, keep_b) << shift; };

  const CircuitSet ca = circuits(a);
  const CircuitSet cb = circuits(b);
  std::vector<Subset> cs;
  std::vector<Subset> a_through_p, b_through_q;
  for (Subset c : ca.circuits) {
    if (contains(c, p)) a_through_p.push_back(map_a(c));
    else cs.push_back(map_a(c));
  }
  for (Subset d : cb.circuits) {
    if (contains(d, q)) b_through_q.push_back(map_b(d));
    else cs.push_back(map_b(d));
  }
  for (Subset c : a_through_p) {
    for (Subset d : b_through_q) cs.push_back(c | d);
  }

  const int r = a.rank() + b.rank() - 1;
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) {
    for (Subset c : cs) {
      if ((c & ~s) == 0) return;
    }
    bases.push_back(s);
  });
  return Matroid::trusted(n, std::move(bases));
}

namespace {

struct FamilyIndex {
  int n;
  std::vector<std::uint64_t> table;
  std::vector<int> degree;                // per element (0-based)
  std::vector<std::vector<int>> codegree; // per element pair

  FamilyIndex(int n_, const std::vector<Subset>& fam) : n(n_) {
    table.assign(((std::size_t{1} << n) + 63) / 64, 0);
    degree.assign(n, 0);
    codegree.assign(n, std::vector<int>(n, 0));
    for (Subset s : fam) {
      table[s >> 6] |= std::uint64_t{1} << (s & 63);
      for (int i = 0; i < n; ++i) {
        if (!((s >> i) & 1u)) continue;
        ++degree[i];
        for (int j = 0; j < n; ++j) {
          if ((s >> j) & 1u) ++codegree[i][j];
        }
      }
    }
  }
  bool has(Subset s) const { return (table[s >> 6] >> (s & 63)) & 1u; }
};

}  // namespace

std::optional<std::vector<int>> family_isomorphism(int n, const std::vector<Subset>& a,
                                                   const std::vector<Subset>& b) {
  if (a.size() != b.size()) return std::nullopt;
  const FamilyIndex ia(n, a), ib(n, b);
  {
    auto da = ia.degree, db = ib.degree;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return std::nullopt;
    std::vector<std::vector<int>> ra, rb;
    for (int i = 0; i < n; ++i) {
      auto x = ia.codegree[i];
      auto y = ib.codegree[i];
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      ra.push_back(std::move(x));
      rb.push_back(std::move(y));
    }
    std::sort(ra.begin(), ra.end());
    std::sort(rb.begin(), rb.end());
    if (ra != rb) return std::nullopt;
  }
  // Assign the most constrained elements first: rarest degree class.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> class_size(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) class_size[i] += ia.degree[j] == ia.degree[i];
  }
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return class_size[x] < class_size[y]; });

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto full_check = [&]() {
    for (Subset s : a) {
      Subset t = 0;
      for (Subset rest = s; rest; rest &= rest - 1) t |= Subset{1} << image[std::countr_zero(rest)];
      if (!ib.has(t)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, int depth) -> bool {
    if (depth == n) return full_check();
    const int x = order[depth];
    for (int y = 0; y < n; ++y) {
      if (used[y] || ib.degree[y] != ia.degree[x] || ib.codegree[y][y] != ia.codegree[x][x]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        const int w = order[d];
        ok = ia.codegree[x][w] == ib.codegree[y][image[w]];
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      image[x] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = image[i] + 1;
  return perm;
}

std::optional<std::vector<int>> isomorphism(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.num_bases() != b.num_bases()) return std::nullopt;
  return family_isomorphism(a.size(), a.bases(), b.bases());
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<Subset> bases;
  bases.reserve(m.num_bases());
  for (Subset s : m.bases()) {
    Subset t = 0;
    for (int e : elements_of(s)) t |= bit_of(perm[e - 1]);
    bases.push_back(t);
  }
  return Matroid::trusted(m.size(), std::move(bases));
}

bool has_minor(const Matroid& m, const Matroid& target) {
  const int removed = m.size() - target.size();
  const int k = m.rank() - target.rank();
  if (removed < 0 || k < 0 || k > removed) return false;
  // Every minor is M/C\D with C independent, |C| = k, and D coindependent in M/C.
  bool found = false;
  for_each_k_subset(m.size(), k, [&](Subset c) {
    if (found || !is_independent(m, c)) return;
    const Subset rest = m.ground_set() & ~c;
    const int rest_size = popcount(rest);
    for_each_k_subset(rest_size, removed - k, [&](Subset local) {
      if (found) return;
      // Spread local bits over rest.
      Subset d = 0;
      int idx = 0;
      for (Subset r = rest; r; r &= r - 1, ++idx) {
        if ((local >> idx) & 1u) d |= r & (~r + 1);
      }
      const Subset keep = rest & ~d;
      std::vector<Subset> bases;
      for (Subset b : m.bases()) {
        if ((b & c) == c && (b & d) == 0) bases.push_back(compress(b, keep));
      }
      if (bases.empty() || bases.size() != target.num_bases()) return;
      const Matroid minor = Matroid::trusted(popcount(keep), std::move(bases));
      if (minor.rank() == target.rank() && is_isomorphic(minor, target)) found = true;
    });
  });
  return found;
}

std::vector<Subset> components(const Matroid& m) {
  // Elements e, f share a component iff some circuit contains both; loops and
  // coloops are singleton components.
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : circuits(m).circuits) {
    const int first = std::countr_zero(c);
    for (Subset rest = c & (c - 1); rest; rest &= rest - 1) {
      parent[find(std::countr_zero(rest))] = find(first);
    }
  }
  std::vector<Subset> comp(n, 0);
  for (int e = 0; e < n; ++e) comp[find(e)] |= Subset{1} << e;
  std::vector<Subset> out;
  for (Subset s : comp) {
    if (s) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](Subset x, Subset y) { return std::countr_zero(x) < std::countr_zero(y); });
  return out;
}

bool is_connected(const Matroid& m) {
  if (m.size() <= 1) return true;
  const auto rank = rank_table(m);
  const Subset ground = m.ground_set();
  // A separator A (containing element 1) with r(A) + r(E-A) = r(M).
  for (Subset a = 1; a < ground; a += 2) {
    if (rank[a] + rank[ground & ~a] == m.rank()) return false;
  }
  return true;
}

std::optional<std::pair<Subset, Subset>> two_separation(const Matroid& m) {
  if (m.size() < 4) return std::nullopt;
  const auto rank = rank_table(m);
  const Subset ground = m.ground_set();
  for (Subset a = 1; a < ground; a += 2) {
    const Subset b = ground & ~a;
    if (popcount(a) < 2 || popcount(b) < 2) continue;
    if (rank[a] + rank[b] - m.rank() <= 1) return std::make_pair(a, b);
  }
  return std::nullopt;
}

bool is_circuit_hyperplane(const Matroid& m, Subset h) {
  if (popcount(h) != m.rank() || m.is_basis(h) || m.rank() == 0) return false;
  for (Subset rest = h; rest; rest &= rest - 1) {
    const Subset e = rest & (~rest + 1);
    if (!is_independent(m, h & ~e)) return false;
  }
  return closure(m, h) == h;
}

Matroid relax(const Matroid& m, Subset h) {
  if (!is_circuit_hyperplane(m, h)) {
    throw MatroidError(ErrorCode::kNotCircuitHyperplane, to_string(h) + " is not a circuit-hyperplane");
  }
  std::vector<Subset> bases = m.bases();
  bases.push_back(h);
  return Matroid::trusted(m.size(), std::move(bases));
}

}  // namespace matroidwb
