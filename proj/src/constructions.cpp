#include "matroidwb/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace matroidwb {

void MultiGraph::validate() const {
  if (num_vertices < 0) throw MatroidError(ErrorCode::kInvalidArgument, "negative vertex count");
  if (num_edges() > kMaxElements) {
    throw MatroidError(ErrorCode::kInvalidArgument, "graph has " + std::to_string(num_edges()) + " edges, at most 16 allowed");
  }
  for (const auto& [u, w] : edges) {
    if (u < 1 || u > num_vertices || w < 1 || w > num_vertices) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "edge (" + std::to_string(u) + "," + std::to_string(w) + ") has an endpoint outside [1," +
                             std::to_string(num_vertices) + "]");
    }
  }
}

void SetSystem::validate() const {
  if (n < 1 || n > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "set system ground set outside [1,16]");
  if (family.empty()) throw MatroidError(ErrorCode::kInvalidArgument, "set system needs at least one member");
  for (Subset a : family) {
    if (a & ~full_set(n)) throw MatroidError(ErrorCode::kInvalidArgument, "member " + to_string(a) + " outside [n]");
  }
}

namespace {

int count_north(std::string_view s) { return static_cast<int>(std::count(s.begin(), s.end(), 'N')); }

std::string swap_steps(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = c == 'N' ? 'E' : 'N';
  return out;
}

std::vector<int> north_positions(const std::string& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] == 'N') out.push_back(i + 1);
  }
  return out;
}

// Smallest and largest height visited at each column x = 0..m.
std::vector<std::pair<int, int>> column_ranges(const std::string& path) {
  const int m = static_cast<int>(path.size()) - count_north(path);
  std::vector<std::pair<int, int>> out(m + 1, {-1, -1});
  int x = 0, y = 0;
  out[0] = {0, 0};
  for (char c : path) {
    if (c == 'N') {
      ++y;
      out[x].second = y;
    } else {
      ++x;
      out[x] = {y, y};
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), edges_(n, 0), vertices_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Returns false if u, w were already joined.
  bool unite(int u, int w) {
    u = find(u);
    w = find(w);
    if (u == w) {
      ++edges_[u];
      return false;
    }
    parent_[w] = u;
    edges_[u] += edges_[w] + 1;
    vertices_[u] += vertices_[w];
    return true;
  }
  int edges(int x) { return edges_[find(x)]; }
  int vertices(int x) { return vertices_[find(x)]; }

 private:
  std::vector<int> parent_, edges_, vertices_;
};

// Bases are the independent sets of maximum size.
template <typename Independent>
Matroid from_independence(int n, Independent&& independent) {
  for (int k = n; k >= 0; --k) {
    std::vector<Subset> bases;
    for_each_k_subset(n, k, [&](Subset s) {
      if (independent(s)) bases.push_back(s);
    });
    if (!bases.empty()) return Matroid::trusted(n, std::move(bases));
  }
  return Matroid::trusted(n, {0});
}

bool graph_forest(const MultiGraph& g, Subset s) {
  UnionFind uf(g.num_vertices + 1);
  for (int e : elements_of(s)) {
    const auto [u, w] = g.edges[e - 1];
    if (!uf.unite(u, w)) return false;
  }
  return true;
}

bool graph_bicircular_independent(const MultiGraph& g, Subset s) {
  UnionFind uf(g.num_vertices + 1);
  for (int e : elements_of(s)) {
    const auto [u, w] = g.edges[e - 1];
    uf.unite(u, w);
    if (uf.edges(u) > uf.vertices(u)) return false;
  }
  return true;
}

// Kuhn's augmenting-path matching of the elements of s into distinct members.
bool matchable(const SetSystem& sys, Subset s) {
  const auto elems = elements_of(s);
  if (elems.size() > sys.family.size()) return false;
  std::vector<int> owner(sys.family.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    std::vector<bool> seen(sys.family.size(), false);
    auto augment = [&](auto&& self, int item) -> bool {
      for (std::size_t j = 0; j < sys.family.size(); ++j) {
        if (seen[j] || !contains(sys.family[j], elems[item])) continue;
        seen[j] = true;
        if (owner[j] < 0 || self(self, owner[j])) {
          owner[j] = item;
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, static_cast<int>(i))) return false;
  }
  return true;
}

}  // namespace

LatticePathPair::LatticePathPair(std::string lower, std::string upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  auto bad = [](const std::string& why) { throw MatroidError(ErrorCode::kPathViolation, why); };
  if (lower_.size() != upper_.size()) bad("paths have different lengths");
  if (lower_.empty()) bad("paths are empty");
  if (lower_.size() > static_cast<std::size_t>(kMaxElements)) bad("paths longer than 16 steps");
  for (const auto* p : {&lower_, &upper_}) {
    for (char c : *p) {
      if (c != 'N' && c != 'E') bad("step '" + std::string(1, c) + "' is not N or E");
    }
  }
  if (count_north(lower_) != count_north(upper_)) bad("paths end at different points");
  int nl = 0, nu = 0;
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    nl += lower_[i] == 'N';
    nu += upper_[i] == 'N';
    if (nl > nu) bad("lower path goes above the upper path after step " + std::to_string(i + 1));
  }
}

LatticePathPair LatticePathPair::from_bounds(const std::vector<int>& lower_ends, const std::vector<int>& upper_ends, int n) {
  if (lower_ends.size() != upper_ends.size()) {
    throw MatroidError(ErrorCode::kPathViolation, "lower and upper bound lists differ in length");
  }
  std::string lower(n, 'E'), upper(n, 'E');
  for (std::size_t i = 0; i < lower_ends.size(); ++i) {
    const int l = lower_ends[i], u = upper_ends[i];
    if (l < 1 || u > n || l > u) {
      throw MatroidError(ErrorCode::kPathViolation,
                         "interval [" + std::to_string(l) + "," + std::to_string(u) + "] invalid on [" + std::to_string(n) + "]");
    }
    if (i > 0 && (lower_ends[i] <= lower_ends[i - 1] || upper_ends[i] <= upper_ends[i - 1])) {
      throw MatroidError(ErrorCode::kPathViolation, "bounds must be strictly increasing");
    }
    upper[l - 1] = 'N';
    lower[u - 1] = 'N';
  }
  return LatticePathPair(lower, upper);
}

int LatticePathPair::rank() const { return count_north(lower_); }
std::vector<int> LatticePathPair::lower_bounds() const { return north_positions(upper_); }
std::vector<int> LatticePathPair::upper_bounds() const { return north_positions(lower_); }

LatticePathPair LatticePathPair::transposed() const { return LatticePathPair(swap_steps(upper_), swap_steps(lower_)); }

Matroid uniform(int k, int n) {
  if (n < 0 || n > kMaxElements || k < 0 || k > n) {
    throw MatroidError(ErrorCode::kInvalidArgument, "uniform(" + std::to_string(k) + "," + std::to_string(n) + ") out of range");
  }
  std::vector<Subset> bases;
  for_each_k_subset(n, k, [&](Subset s) { bases.push_back(s); });
  return Matroid::trusted(n, std::move(bases));
}

Matroid graphic(const MultiGraph& g) {
  g.validate();
  return from_independence(g.num_edges(), [&](Subset s) { return graph_forest(g, s); });
}

Matroid bicircular(const MultiGraph& g) {
  g.validate();
  return from_independence(g.num_edges(), [&](Subset s) { return graph_bicircular_independent(g, s); });
}

SetSystem bicircular_presentation(const MultiGraph& g) {
  g.validate();
  SetSystem sys{g.num_edges(), std::vector<Subset>(g.num_vertices, 0)};
  for (int e = 1; e <= g.num_edges(); ++e) {
    const auto [u, w] = g.edges[e - 1];
    sys.family[u - 1] |= bit_of(e);
    sys.family[w - 1] |= bit_of(e);
  }
  return sys;
}

Matroid transversal(const SetSystem& s) {
  s.validate();
  return from_independence(s.n, [&](Subset set) { return matchable(s, set); });
}

Matroid lattice_path(const LatticePathPair& l) {
  const auto lo = l.lower_bounds();
  const auto hi = l.upper_bounds();
  SetSystem sys{l.length(), {}};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    Subset interval = 0;
    for (int e = lo[i]; e <= hi[i]; ++e) interval |= bit_of(e);
    sys.family.push_back(interval);
  }
  if (sys.family.empty()) return Matroid::trusted(l.length(), {0});
  return transversal(sys);
}

bool is_snake(const LatticePathPair& l) {
  if (l.length() < 2) return false;
  if (!is_connected(lattice_path(l))) return false;
  const auto below = column_ranges(l.lower());
  const auto above = column_ranges(l.upper());
  const int m = static_cast<int>(below.size()) - 1;
  for (int x = 1; x < m; ++x) {
    if (above[x].first - below[x].second > 1) return false;
  }
  return true;
}

Matroid principal_truncation(const Matroid& m, Subset f) {
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    for (Subset rest = b & f; rest; rest &= rest - 1) bases.push_back(b & ~(rest & (~rest + 1)));
  }
  if (bases.empty()) {
    throw MatroidError(ErrorCode::kFDisjointFromAllBases, "F=" + to_string(f) + " meets no basis");
  }
  return Matroid::trusted(m.size(), std::move(bases));
}

Matroid principal_extension(const Matroid& m, Subset f) {
  if (m.size() + 1 > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "extension exceeds 16 elements");
  const Matroid truncated = principal_truncation(m, f);
  std::vector<Subset> bases = m.bases();
  const Subset added = bit_of(m.size() + 1);
  for (Subset b : truncated.bases()) bases.push_back(b | added);
  return Matroid::trusted(m.size() + 1, std::move(bases));
}

Matroid add_loop(const Matroid& m) {
  if (m.size() + 1 > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "exceeds 16 elements");
  return Matroid::trusted(m.size() + 1, m.bases());
}

Matroid add_coloop(const Matroid& m) {
  if (m.size() + 1 > kMaxElements) throw MatroidError(ErrorCode::kInvalidArgument, "exceeds 16 elements");
  std::vector<Subset> bases = m.bases();
  for (Subset& b : bases) b |= bit_of(m.size() + 1);
  return Matroid::trusted(m.size() + 1, std::move(bases));
}

Matroid lpm_recursive_build(const std::vector<BuildStep>& steps) {
  Matroid m = Matroid::trusted(0, {0});
  for (const BuildStep& step : steps) {
    const int i = m.size() + 1;
    switch (step.kind) {
      case BuildStep::Kind::kLoop: m = add_loop(m); break;
      case BuildStep::Kind::kColoop: m = add_coloop(m); break;
      case BuildStep::Kind::kPrincipal: {
        if (step.from < 1 || step.from >= i) {
          throw MatroidError(ErrorCode::kInvalidArgument,
                             "principal step at element " + std::to_string(i) + " needs 1 <= h < " + std::to_string(i));
        }
        Subset gen = 0;
        for (int e = step.from; e < i; ++e) gen |= bit_of(e);
        if (!is_independent(m, gen)) {
          throw MatroidError(ErrorCode::kDependentGeneratorSet, to_string(gen) + " is dependent before element " + std::to_string(i));
        }
        m = principal_extension(m, closure(m, gen));
        break;
      }
    }
  }
  return m;
}

MultiGraph complete_graph(int v) {
  MultiGraph g{v, {}};
  for (int a = 1; a <= v; ++a) {
    for (int b = a + 1; b <= v; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

MultiGraph complete_bipartite_graph(int a, int b) {
  MultiGraph g{a + b, {}};
  for (int x = 1; x <= a; ++x) {
    for (int y = a + 1; y <= a + b; ++y) g.edges.emplace_back(x, y);
  }
  return g;
}

MultiGraph cycle_graph(int v) {
  MultiGraph g{v, {}};
  for (int x = 1; x <= v; ++x) g.edges.emplace_back(x, x % v + 1);
  return g;
}

MultiGraph whirl_graph(int r) {
  MultiGraph g = cycle_graph(r);
  for (int x = 1; x <= r; ++x) g.edges.emplace_back(x, x);
  return g;
}

Matroid whirl(int r) {
  if (r < 2) throw MatroidError(ErrorCode::kInvalidArgument, "whirl needs rank >= 2");
  return bicircular(whirl_graph(r));
}

std::vector<std::string> atlas_names() { return {"MK4", "BK33", "TicTacToe", "U24", "W3"}; }

Matroid named_atlas(std::string_view name) {
  if (name == "MK4") return graphic(complete_graph(4));
  if (name == "BK33") return bicircular(complete_bipartite_graph(3, 3));
  if (name == "TicTacToe") return dual(bicircular(complete_bipartite_graph(3, 3)));
  if (name == "U24") return uniform(2, 4);
  if (name == "W3") return whirl(3);
  throw MatroidError(ErrorCode::kUnknownName, "no atlas entry named '" + std::string(name) + "'");
}

}  // namespace matroidwb
