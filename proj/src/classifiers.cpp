#include "matroidwb/classifiers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace matroidwb {

bool is_valid_order(const LinearOrder& order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  Subset seen = 0;
  for (int e : order) {
    if (e < 1 || e > n || contains(seen, e)) return false;
    seen |= bit_of(e);
  }
  return true;
}

bool is_paving(const Matroid& m) {
  const auto cs = circuits(m);
  return std::all_of(cs.circuits.begin(), cs.circuits.end(), [&](Subset c) { return popcount(c) >= m.rank(); });
}

bool is_sparse_paving(const Matroid& m) { return is_paving(m) && is_paving(dual(m)); }

namespace {

// Bases rewritten in positions: element order[k] becomes position k+1.
std::vector<Subset> to_positions(const Matroid& m, const LinearOrder& order) {
  std::vector<int> pos(m.size() + 1);
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k) + 1;
  std::vector<Subset> out;
  out.reserve(m.num_bases());
  for (Subset b : m.bases()) {
    Subset t = 0;
    for (Subset rest = b; rest; rest &= rest - 1) t |= bit_of(pos[std::countr_zero(rest) + 1]);
    out.push_back(t);
  }
  return out;
}

// Odd/even split of the sorted multiset union of two position sets.
std::pair<Subset, Subset> sort_split(Subset a, Subset b) {
  Subset odd = 0, even = 0;
  int count = 0;
  for (Subset rest = a | b; rest; rest &= rest - 1) {
    const Subset bit = rest & (~rest + 1);
    if ((a & bit) && (b & bit)) {
      odd |= bit;
      even |= bit;
      count += 2;
    } else {
      if (count % 2 == 0) {
        odd |= bit;
      } else {
        even |= bit;
      }
      ++count;
    }
  }
  return {odd, even};
}

class SortingChecker {
 public:
  explicit SortingChecker(const Matroid& m) : m_(m), table_((std::size_t{1} << m.size()) / 64 + 1, 0) {}

  bool check(const LinearOrder& order) {
    const auto bases = to_positions(m_, order);
    std::fill(table_.begin(), table_.end(), 0);
    for (Subset b : bases) table_[b >> 6] |= std::uint64_t{1} << (b & 63);
    // The pair that refuted the previous order is tried first.
    if (last_fail_) {
      const auto [i, j] = *last_fail_;
      if (!sortable(bases[i], bases[j])) return false;
    }
    for (std::size_t i = 0; i < bases.size(); ++i) {
      for (std::size_t j = i + 1; j < bases.size(); ++j) {
        if (!sortable(bases[i], bases[j])) {
          last_fail_ = std::make_pair(i, j);
          return false;
        }
      }
    }
    return true;
  }

 private:
  bool has(Subset s) const { return (table_[s >> 6] >> (s & 63)) & 1u; }
  bool sortable(Subset a, Subset b) const {
    const auto [odd, even] = sort_split(a, b);
    return has(odd) && has(even);
  }

  const Matroid& m_;
  std::vector<std::uint64_t> table_;
  std::optional<std::pair<std::size_t, std::size_t>> last_fail_;
};

}  // namespace

bool is_base_sorting_order(const Matroid& m, const LinearOrder& order) {
  if (!is_valid_order(order, m.size())) throw MatroidError(ErrorCode::kInvalidArgument, "not a linear order of the ground set");
  SortingChecker checker(m);
  return checker.check(order);
}

PositroidSearch positroid_verdict(const Matroid& m) {
  PositroidSearch out;
  LinearOrder order(m.size());
  std::iota(order.begin(), order.end(), 1);
  SortingChecker checker(m);
  do {
    ++out.orders_tried;
    if (checker.check(order)) {
      out.order = order;
      return out;
    }
  } while (m.size() > 1 && std::next_permutation(order.begin() + 1, order.end()));
  return out;
}

LinearOrder cyclic_shift(const LinearOrder& order, int k) {
  LinearOrder out = order;
  if (!out.empty()) std::rotate(out.begin(), out.begin() + (k % static_cast<int>(out.size())), out.end());
  return out;
}

namespace {

std::string family_signature(int n, const std::vector<Subset>& family) {
  std::vector<int> degree(n, 0);
  std::vector<std::vector<int>> codegree(n, std::vector<int>(n, 0));
  for (Subset s : family) {
    const auto els = elements_of(s);
    for (int a : els) {
      ++degree[a - 1];
      for (int b : els) {
        if (a != b) ++codegree[a - 1][b - 1];
      }
    }
  }
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    auto row = codegree[i];
    std::sort(row.begin(), row.end());
    row.push_back(degree[i]);
    std::rotate(row.rbegin(), row.rbegin() + 1, row.rend());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& row : rows) {
    for (int v : row) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

Matroid sparse_paving_from(int n, int r, const std::vector<Subset>& hyper) {
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) {
    if (std::find(hyper.begin(), hyper.end(), s) == hyper.end()) bases.push_back(s);
  });
  return Matroid::trusted(n, std::move(bases));
}

}  // namespace

void sparse_paving_family(int n, int r, std::size_t limit, const std::function<bool(const Matroid&)>& sink) {
  if (n < 1 || n > kMaxElements || r < 0 || r > n) {
    throw MatroidError(ErrorCode::kInvalidArgument, "sparse paving family needs 0 <= r <= n <= 16");
  }
  std::vector<Subset> rsets;
  for_each_k_subset(n, r, [&](Subset s) { rsets.push_back(s); });
  std::size_t emitted = 0;
  auto emit = [&](const std::vector<Subset>& hyper) {
    if (hyper.size() == rsets.size()) return true;  // no bases left
    const Matroid m = sparse_paving_from(n, r, hyper);
    if (!is_sparse_paving(m)) return true;
    ++emitted;
    return sink(m) && emitted < limit;
  };
  if (limit == 0) return;
  std::vector<std::vector<Subset>> level = {{}};
  if (!emit(level.front())) return;
  while (!level.empty()) {
    std::vector<std::vector<Subset>> next;
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (const auto& hyper : level) {
      for (Subset s : rsets) {
        bool ok = true;
        for (Subset h : hyper) {
          if (h == s || popcount(h & s) > r - 2) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        std::vector<Subset> grown = hyper;
        grown.push_back(s);
        std::sort(grown.begin(), grown.end());
        auto& bucket = buckets[family_signature(n, grown)];
        bool seen = false;
        for (std::size_t idx : bucket) {
          if (family_isomorphism(n, grown, next[idx])) {
            seen = true;
            break;
          }
        }
        if (seen) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(grown));
        if (!emit(next.back())) return;
      }
    }
    level = std::move(next);
  }
}

std::vector<Matroid> sparse_paving_family(int n, int r, std::size_t limit) {
  std::vector<Matroid> out;
  sparse_paving_family(n, r, limit, [&](const Matroid& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

namespace {

// All N/E words of the given length with `north` N steps, lexicographic.
std::vector<std::string> paths(int length, int north) {
  std::vector<std::string> out;
  std::string p(length - north, 'E');
  p.append(north, 'N');
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool weakly_below(const std::string& lower, const std::string& upper) {
  int nl = 0, nu = 0;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    nl += lower[i] == 'N';
    nu += upper[i] == 'N';
    if (nl > nu) return false;
  }
  return true;
}

}  // namespace

void lpm_family(int max_total, std::size_t limit, bool connected_only,
                const std::function<bool(const LatticePathPair&, const Matroid&)>& sink) {
  if (max_total > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "path length above 16");
  std::size_t emitted = 0;
  for (int len = 1; len <= max_total; ++len) {
    for (int r = 0; r <= len; ++r) {
      const auto words = paths(len, r);
      for (const auto& upper : words) {
        for (const auto& lower : words) {
          if (!weakly_below(lower, upper)) continue;
          const LatticePathPair pair(lower, upper);
          const Matroid m = lattice_path(pair);
          if (connected_only && !is_connected(m)) continue;
          if (emitted >= limit) return;
          ++emitted;
          if (!sink(pair, m)) return;
        }
      }
    }
  }
}

namespace {

// Multiplicity matrix, upper triangle with loops on the diagonal.
std::vector<int> multiplicities(const MultiGraph& g, const std::vector<int>& relabel) {
  const int v = g.num_vertices;
  std::vector<int> mult(v * v, 0);
  for (const auto& [a, b] : g.edges) {
    int x = relabel[a - 1], y = relabel[b - 1];
    if (x > y) std::swap(x, y);
    ++mult[x * v + y];
  }
  return mult;
}

bool connected(const MultiGraph& g) {
  if (g.num_vertices == 0) return false;
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges) parent[find(a - 1)] = find(b - 1);
  for (int x = 1; x < g.num_vertices; ++x) {
    if (find(x) != find(0)) return false;
  }
  return true;
}

}  // namespace

MultiGraph canonical_graph(const MultiGraph& g) {
  const int v = g.num_vertices;
  // Vertex signature: loops, degree, sorted neighbour multiplicities.
  std::vector<std::vector<int>> sig(v);
  {
    std::vector<int> ident(v);
    std::iota(ident.begin(), ident.end(), 0);
    const auto mult = multiplicities(g, ident);
    for (int x = 0; x < v; ++x) {
      int degree = 0;
      std::vector<int> nb;
      for (int y = 0; y < v; ++y) {
        const int m = x <= y ? mult[x * v + y] : mult[y * v + x];
        if (x == y) {
          degree += 2 * m;
        } else {
          degree += m;
          if (m) nb.push_back(m);
        }
      }
      std::sort(nb.begin(), nb.end());
      sig[x] = {mult[x * v + x], degree};
      sig[x].insert(sig[x].end(), nb.begin(), nb.end());
    }
  }
  std::vector<int> by_sig(v);
  std::iota(by_sig.begin(), by_sig.end(), 0);
  std::stable_sort(by_sig.begin(), by_sig.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  std::vector<std::pair<int, int>> classes;  // [begin, end) in by_sig
  for (int k = 0; k < v;) {
    int e = k;
    while (e < v && sig[by_sig[e]] == sig[by_sig[k]]) ++e;
    classes.emplace_back(k, e);
    k = e;
  }
  std::vector<int> best_mult, best_relabel;
  std::vector<int> arrangement = by_sig;
  // Enumerate permutations within each signature class (odometer over classes).
  for (auto& [b, e] : classes) std::sort(arrangement.begin() + b, arrangement.begin() + e);
  while (true) {
    std::vector<int> relabel(v);
    for (int k = 0; k < v; ++k) relabel[arrangement[k]] = k;
    auto mult = multiplicities(g, relabel);
    if (best_mult.empty() || mult > best_mult) {
      best_mult = std::move(mult);
      best_relabel = relabel;
    }
    std::size_t c = 0;
    for (; c < classes.size(); ++c) {
      auto [b, e] = classes[c];
      if (std::next_permutation(arrangement.begin() + b, arrangement.begin() + e)) break;
    }
    if (c == classes.size()) break;
  }
  MultiGraph out{v, {}};
  for (int x = 0; x < v; ++x) {
    for (int y = x; y < v; ++y) {
      for (int k = 0; k < best_mult[x * v + y]; ++k) out.edges.emplace_back(x + 1, y + 1);
    }
  }
  return out;
}

void bicircular_family(int max_edges, std::size_t limit,
                       const std::function<bool(const MultiGraph&, const Matroid&)>& sink) {
  if (max_edges > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "more than 16 edges");
  std::size_t emitted = 0;
  std::vector<MultiGraph> level;
  for (const MultiGraph& g : {MultiGraph{1, {{1, 1}}}, MultiGraph{2, {{1, 2}}}}) level.push_back(canonical_graph(g));
  for (int e = 1; e <= max_edges && !level.empty(); ++e) {
    for (const auto& g : level) {
      if (emitted >= limit) return;
      ++emitted;
      if (!sink(g, bicircular(g))) return;
    }
    if (e == max_edges) break;
    std::set<std::vector<std::pair<int, int>>> next_keys;
    std::vector<MultiGraph> next;
    for (const auto& g : level) {
      std::vector<MultiGraph> grown;
      for (int a = 1; a <= g.num_vertices; ++a) {
        for (int b = a; b <= g.num_vertices; ++b) {
          MultiGraph h = g;
          h.edges.emplace_back(a, b);
          grown.push_back(std::move(h));
        }
        MultiGraph h = g;
        h.num_vertices += 1;
        h.edges.emplace_back(a, h.num_vertices);
        grown.push_back(std::move(h));
      }
      for (auto& h : grown) {
        MultiGraph c = canonical_graph(h);
        if (!connected(c)) continue;
        if (next_keys.insert(c.edges).second) next.push_back(std::move(c));
      }
    }
    // Deterministic order within a level: vertices, then edge list.
    std::sort(next.begin(), next.end(), [](const MultiGraph& x, const MultiGraph& y) {
      return std::tie(x.num_vertices, x.edges) < std::tie(y.num_vertices, y.edges);
    });
    level = std::move(next);
  }
}

}  // namespace matroidwb
