// embeddings.hpp
// Enumeration of all copies of a pattern graph inside K_n, where a copy
// is identified with its edge set (isolated pattern vertices dropped).
// Every injection of the pattern vertices into [n] yields a copy since
// the host is complete; distinct edge sets are listed once, so the count
// is C(n,v) * v! / |Aut| for a pattern on v non-isolated vertices.

#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "tonal/canonical.hpp"
#include "tonal/errors.hpp"
#include "tonal/graph.hpp"

namespace tonal {

inline constexpr uint64_t kDefaultEmbeddingBudget = 2'000'000;

namespace detail {

inline uint64_t falling_factorial(int n, int v) {
  uint64_t r = 1;
  for (int i = 0; i < v; ++i) r *= uint64_t(n - i);
  return r;
}

}  // namespace detail

// Number of distinct copies of g in K_n (after stripping isolated
// vertices). Exact, using |Aut| of the stripped pattern.
inline uint64_t count_embeddings(const Graph& g, int n) {
  auto stripped = graph_of_edge_set(g.edges);
  if (!stripped) return 1;  // the empty pattern has the single empty copy
  int v = stripped->n;
  if (v > n) return 0;
  uint64_t binom = 1;
  for (int i = 1; i <= v; ++i) binom = binom * uint64_t(n - v + i) / uint64_t(i);
  uint64_t perms = detail::falling_factorial(v, v);
  return binom * (perms / canonical_form(*stripped).aut_count);
}

// Sorted (ascending bitmap) list of all copies of g in K_n.
inline std::vector<EdgeBits> enumerate_embeddings(
    const Graph& g, int n, uint64_t budget = kDefaultEmbeddingBudget) {
  if (g.n > n || n > kMaxVertices)
    throw std::invalid_argument("enumerate_embeddings: need pattern order <= n <= 16");
  auto stripped = graph_of_edge_set(g.edges);
  if (!stripped) return {EdgeBits{}};

  uint64_t total = count_embeddings(g, n);
  if (total > budget)
    throw budget_error("enumerate_embeddings", total, budget);

  const Graph& p = *stripped;
  int v = p.n;
  std::vector<std::pair<int, int>> pattern_edges;
  p.edges.for_each([&](int s) { pattern_edges.push_back(slot_endpoints(s)); });

  std::vector<EdgeBits> out;
  out.reserve(total);

  std::vector<int> subset(v);
  for (int i = 0; i < v; ++i) subset[i] = i;
  std::vector<int> perm(v);
  std::unordered_set<EdgeBits, EdgeBitsHash> seen;
  for (;;) {
    // all images of the pattern on this vertex subset
    seen.clear();
    for (int i = 0; i < v; ++i) perm[i] = subset[i];
    do {
      EdgeBits copy;
      for (auto [a, b] : pattern_edges) copy.set(edge_slot(perm[a], perm[b]));
      if (seen.insert(copy).second) out.push_back(copy);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // next v-combination of [0,n)
    int i = v - 1;
    while (i >= 0 && subset[i] == n - v + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < v; ++j) subset[j] = subset[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tonal
