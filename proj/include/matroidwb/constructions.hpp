#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroidwb/matroid.hpp"

namespace matroidwb {

// Vertices 1..num_vertices; edge k (0-based) is matroid element k+1. Loops
// (u, u) and parallel edges are allowed.
struct MultiGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  void validate() const;
};

// A multiset family A_1..A_k of subsets of [n].
struct SetSystem {
  int n = 0;
  std::vector<Subset> family;

  void validate() const;
};

// Two monotone lattice paths over {N, E} from (0,0) to (m,r); `lower` never
// goes strictly above `upper`.
class LatticePathPair {
 public:
  // Throws kPathViolation if the paths are malformed or cross.
  LatticePathPair(std::string lower, std::string upper);

  // From interval endpoints: lower_ends[i] = l_i (N-step positions of the upper
  // path), upper_ends[i] = u_i (N-step positions of the lower path), on [n].
  static LatticePathPair from_bounds(const std::vector<int>& lower_ends, const std::vector<int>& upper_ends, int n);

  const std::string& lower() const { return lower_; }
  const std::string& upper() const { return upper_; }
  int length() const { return static_cast<int>(lower_.size()); }
  int rank() const;
  std::vector<int> lower_bounds() const;  // l_1 < ... < l_r
  std::vector<int> upper_bounds() const;  // u_1 < ... < u_r

  // Pair presenting the dual matroid: swap N/E and exchange the roles of the paths.
  LatticePathPair transposed() const;

 private:
  std::string lower_, upper_;
};

Matroid uniform(int k, int n);
Matroid graphic(const MultiGraph& g);
Matroid bicircular(const MultiGraph& g);
SetSystem bicircular_presentation(const MultiGraph& g);
Matroid transversal(const SetSystem& s);
Matroid lattice_path(const LatticePathPair& l);
bool is_snake(const LatticePathPair& l);

Matroid principal_truncation(const Matroid& m, Subset f);
// The new element is always n+1.
Matroid principal_extension(const Matroid& m, Subset f);

struct BuildStep {
  enum class Kind { kLoop, kColoop, kPrincipal };
  Kind kind;
  int from = 0;  // h for kPrincipal (1-indexed, h < i)

  static BuildStep loop() { return {Kind::kLoop, 0}; }
  static BuildStep coloop() { return {Kind::kColoop, 0}; }
  static BuildStep principal(int h) { return {Kind::kPrincipal, h}; }
};
Matroid lpm_recursive_build(const std::vector<BuildStep>& steps);

// Adds one element: a loop (in no basis) or a coloop (in every basis).
Matroid add_loop(const Matroid& m);
Matroid add_coloop(const Matroid& m);

Matroid whirl(int r);
MultiGraph whirl_graph(int r);

MultiGraph complete_graph(int v);
MultiGraph complete_bipartite_graph(int a, int b);
MultiGraph cycle_graph(int v);

// MK4, BK33, TicTacToe, U24, W3.
Matroid named_atlas(std::string_view name);
std::vector<std::string> atlas_names();

}  // namespace matroidwb
