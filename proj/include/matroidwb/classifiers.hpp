#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "matroidwb/constructions.hpp"
#include "matroidwb/matroid.hpp"

namespace matroidwb {

// order[k] is the element at position k+1.
using LinearOrder = std::vector<int>;

bool is_valid_order(const LinearOrder& order, int n);

// No circuit smaller than the rank.
bool is_paving(const Matroid& m);
// m and its dual are both paving.
bool is_sparse_paving(const Matroid& m);

// For every pair of bases, the order-sorted multiset union a_1 <= ... <= a_2r
// splits into the bases {a_1, a_3, ...} and {a_2, a_4, ...}.
bool is_base_sorting_order(const Matroid& m, const LinearOrder& order);

struct PositroidSearch {
  std::optional<LinearOrder> order;
  long orders_tried = 0;
};

// Searches orders starting with element 1 in lexicographic order; returns the
// first base-sorting order.
PositroidSearch positroid_verdict(const Matroid& m);

// Cyclic shift of an order by k positions to the left.
LinearOrder cyclic_shift(const LinearOrder& order, int k);

// Sparse paving matroids of rank r on [n], one per isomorphism class, as the
// complements of families H of r-sets with pairwise intersections of size at
// most r-2. Classes are emitted by |H| and then in discovery order; the
// callback returns false to stop early.
void sparse_paving_family(int n, int r, std::size_t limit, const std::function<bool(const Matroid&)>& sink);
std::vector<Matroid> sparse_paving_family(int n, int r, std::size_t limit);

// Every path pair of length 1..max_total with its matroid, by length, rank,
// then lexicographic upper and lower path.
void lpm_family(int max_total, std::size_t limit, bool connected_only,
                const std::function<bool(const LatticePathPair&, const Matroid&)>& sink);

// Connected multigraphs with 1..max_edges edges (loops and parallel edges
// allowed), one per isomorphism class, grown edge by edge.
void bicircular_family(int max_edges, std::size_t limit,
                       const std::function<bool(const MultiGraph&, const Matroid&)>& sink);

// Canonical relabeling used for deduplication.
MultiGraph canonical_graph(const MultiGraph& g);

}  // namespace matroidwb
