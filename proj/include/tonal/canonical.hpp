// canonical.hpp
// Canonical forms and automorphism group orders for graphs on <= 16
// vertices: iterative degree/neighborhood refinement, then exhaustive
// search over vertex orderings consistent with the refined cells.
//
// The canonical code is the graph6 string of the relabeling whose edge
// bitmap is minimal in slot-lexicographic order (slot 0 decided first,
// absent edge < present edge). The number of consistent orderings that
// attain the minimum equals |Aut(G)|: those orderings form one coset of
// the automorphism group. Interchangeable vertices (swap is an
// automorphism) are explored once and accounted for by a multiplier, so
// complete graphs cost O(n^2) instead of n! leaves.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tonal/graph.hpp"

namespace tonal {

struct CanonicalForm {
  int n = 0;
  std::string code;        // graph6 of the canonical labeling
  uint64_t aut_count = 0;  // |Aut(G)|
};

namespace detail {

// First differing slot decides; 0-bit is smaller.
inline bool code_lex_less(const EdgeBits& a, const EdgeBits& b) {
  uint64_t d = a.lo ^ b.lo;
  if (d) return !((a.lo >> std::countr_zero(d)) & 1u);
  d = a.hi ^ b.hi;
  if (d) return !((a.hi >> std::countr_zero(d)) & 1u);
  return false;
}

// Stable ordered partition from degree/neighborhood refinement. Cell order
// follows the sorted signatures, so it is isomorphism-invariant.
inline std::vector<std::vector<int>> refine_cells(const Graph& g) {
  std::vector<int> color(g.n);
  for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
  int ncolors = 0;
  for (;;) {
    std::vector<std::vector<int>> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (uint16_t row = g.adj[v]; row; row &= uint16_t(row - 1))
        nb.push_back(color[std::countr_zero(row)]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq(sig.begin(), sig.end());
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < g.n; ++v)
      color[v] = int(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    int k = static_cast<int>(uniq.size());
    if (k == ncolors) break;
    ncolors = k;
  }
  std::vector<std::vector<int>> cells(ncolors);
  for (int v = 0; v < g.n; ++v) cells[color[v]].push_back(v);
  return cells;
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::vector<int>> cells;
  std::array<int, kMaxVertices> order{};  // position -> vertex
  uint32_t placed = 0;
  EdgeBits code;  // decided slots of the current partial labeling
  EdgeBits best;  // with undecided slots padded to 1 (maximal), so any
                  // real completion compares <= until a leaf pins it down
  uint64_t aut = 0;

  explicit CanonSearch(const Graph& graph) : g(graph), cells(refine_cells(graph)) {
    for (int s = 0; s < slot_count(g.n); ++s) best.set(s);
  }

  // Swapping u and v is an automorphism iff their rows agree off {u,v}.
  bool twins(int u, int v) const {
    uint16_t off = uint16_t(~((1u << u) | (1u << v)));
    return ((g.adj[u] ^ g.adj[v]) & off) == 0;
  }

  static bool block_less(uint32_t x, uint32_t y) {
    uint32_t d = x ^ y;
    return d != 0 && ((x >> std::countr_zero(d)) & 1u) == 0;
  }

  void descend(int pos, size_t cell_idx, uint64_t mult) {
    if (pos == g.n) {
      // The path matched `best` on every decided slot, so code == best.
      aut += mult;
      return;
    }
    while (true) {
      bool exhausted = true;
      for (int v : cells[cell_idx])
        if (!((placed >> v) & 1u)) { exhausted = false; break; }
      if (!exhausted) break;
      ++cell_idx;
    }

    struct Cand { int v; uint32_t block; uint64_t size; };
    std::vector<Cand> reps;
    for (int v : cells[cell_idx]) {
      if ((placed >> v) & 1u) continue;
      bool merged = false;
      for (auto& r : reps)
        if (twins(r.v, v)) { ++r.size; merged = true; break; }
      if (!merged) {
        uint32_t block = 0;
        for (int q = 0; q < pos; ++q)
          if (g.has_edge(order[q], v)) block |= 1u << q;
        reps.push_back({v, block, 1});
      }
    }
    std::sort(reps.begin(), reps.end(),
              [](const Cand& a, const Cand& b) { return block_less(a.block, b.block); });

    const int base = pos * (pos - 1) / 2;
    uint32_t best_block = 0;
    for (int q = 0; q < pos; ++q)
      if (best.test(base + q)) best_block |= 1u << q;

    for (const auto& c : reps) {
      if (block_less(best_block, c.block)) break;  // sorted: rest are worse
      order[pos] = c.v;
      placed |= 1u << c.v;
      for (int q = 0; q < pos; ++q)
        if ((c.block >> q) & 1u) code.set(base + q);
      if (block_less(c.block, best_block)) {
        // Strict improvement: everything decided so far plus a padded tail
        // becomes the new bar; stale automorphism tallies are dropped.
        best = code;
        for (int s = pos * (pos + 1) / 2; s < slot_count(g.n); ++s) best.set(s);
        best_block = c.block;
        aut = 0;
      }
      descend(pos + 1, cell_idx, mult * c.size);
      for (int q = 0; q < pos; ++q)
        if ((c.block >> q) & 1u) code.reset(base + q);
      placed &= ~(1u << c.v);
    }
  }
};

struct RowsKey {
  std::array<uint64_t, 4> rows{};
  int n = 0;
  bool operator==(const RowsKey&) const = default;
};
struct RowsKeyHash {
  size_t operator()(const RowsKey& k) const {
    uint64_t h = uint64_t(k.n) * 0x9e3779b97f4a7c15ull;
    for (uint64_t w : k.rows) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};

inline RowsKey rows_key(const Graph& g) {
  RowsKey k;
  k.n = g.n;
  for (int v = 0; v < g.n; ++v)
    k.rows[v / 4] |= uint64_t(g.adj[v]) << (16 * (v % 4));
  return k;
}

}  // namespace detail

inline CanonicalForm canonical_form_uncached(const Graph& g) {
  detail::CanonSearch search(g);
  search.descend(0, 0, 1);
  return CanonicalForm{g.n, to_graph6(graph_from_edges(g.n, search.best)),
                       search.aut};
}

// Memoized per thread; the amoeba and oracle paths canonicalize the same
// small graphs over and over.
inline const CanonicalForm& canonical_form(const Graph& g) {
  thread_local std::unordered_map<detail::RowsKey, CanonicalForm, detail::RowsKeyHash> memo;
  auto key = detail::rows_key(g);
  auto it = memo.find(key);
  if (it == memo.end()) it = memo.emplace(key, canonical_form_uncached(g)).first;
  return it->second;
}

inline Graph canonical_graph(const Graph& g) {
  return parse_graph6(canonical_form(g).code);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace tonal
