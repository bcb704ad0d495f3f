#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matroidwb {

// Subsets of a ground set of at most 16 elements. Element e (1-indexed) is
// stored in bit e-1.
using Subset = std::uint32_t;

inline constexpr int kMaxElements = 16;

constexpr Subset bit_of(int element) { return Subset{1} << (element - 1); }

constexpr int popcount(Subset s) { return std::popcount(s); }

constexpr bool contains(Subset s, int element) { return (s >> (element - 1)) & 1u; }

constexpr Subset full_set(int n) { return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1); }

// Lexicographic order on equal-size sets compared as ascending element lists:
// the set owning the smallest element of the symmetric difference is smaller.
constexpr bool lex_less(Subset a, Subset b) {
  const Subset d = a ^ b;
  if (d == 0) return false;
  return (a & (d & (~d + 1))) != 0;
}

// Canonical order used for basis lists: by cardinality, then lexicographic.
constexpr bool canonical_less(Subset a, Subset b) {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return lex_less(a, b);
}

inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

inline Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= bit_of(e);
  return s;
}

// "{1,2,5}" style rendering used in diagnostics and error messages.
std::string to_string(Subset s);

// Calls fn(Subset) for every k-subset of [n] in increasing integer order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Subset{0});
    return;
  }
  Subset s = full_set(k);
  const Subset limit = Subset{1} << n;
  while (s < limit) {
    fn(s);
    // Gosper's hack.
    const Subset c = s & (~s + 1);
    const Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

}  // namespace matroidwb
