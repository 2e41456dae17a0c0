// graph.hpp
// Simple undirected graphs on at most 16 vertices: per-vertex adjacency
// bit rows plus a flat edge bitmap, graph6 I/O, standard families and a
// bipartiteness check.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tonal/edgebits.hpp"
#include "tonal/errors.hpp"

namespace tonal {

struct Graph {
  int n = 0;
  std::array<uint16_t, kMaxVertices> adj{};  // row v: bit u set iff uv edge
  EdgeBits edges;

  Graph() = default;
  explicit Graph(int n_) : n(n_) {
    if (n_ < 1 || n_ > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count must be in [1,16]");
  }

  int edge_count() const { return edges.count(); }
  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  int degree(int v) const { return std::popcount(adj[v]); }

  void add_edge(int u, int v) {
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("add_edge: endpoints out of range");
    adj[u] |= uint16_t(1u << v);
    adj[v] |= uint16_t(1u << u);
    edges.set(edge_slot(u, v));
  }

  void remove_edge(int u, int v) {
    adj[u] &= uint16_t(~(1u << v));
    adj[v] &= uint16_t(~(1u << u));
    edges.reset(edge_slot(u, v));
  }

  bool operator==(const Graph&) const = default;

  // Structural invariants: symmetric irreflexive rows consistent with the
  // flat bitmap. Cheap enough to assert in tests.
  bool consistent() const {
    if (n < 1 || n > kMaxVertices) return false;
    int half_degree_sum = 0;
    for (int v = 0; v < n; ++v) {
      if ((adj[v] >> n) != 0) return false;
      if ((adj[v] >> v) & 1u) return false;
      half_degree_sum += std::popcount(adj[v]);
      for (int u = 0; u < n; ++u)
        if (((adj[v] >> u) & 1u) != ((adj[u] >> v) & 1u)) return false;
      for (int u = 0; u < v; ++u)
        if (((adj[v] >> u) & 1u) != (edges.test(edge_slot(u, v)) ? 1u : 0u))
          return false;
    }
    if (!(edges - EdgeBits::universe(n)).none()) return false;
    return half_degree_sum == 2 * edges.count();
  }
};

inline Graph graph_from_edges(int n, const EdgeBits& edges) {
  Graph g(n);
  edges.for_each([&](int s) {
    auto [u, v] = slot_endpoints(s);
    if (v >= n) throw std::invalid_argument("graph_from_edges: slot beyond K_n");
    g.add_edge(u, v);
  });
  return g;
}

// The graph induced by an edge set with isolated vertices stripped:
// vertices are the slot endpoints, relabeled by increasing index. Copies
// of a pattern inside K_n are identified with their edge sets, so this is
// how a copy becomes a Graph again. Returns nothing for the empty set.
inline std::optional<Graph> graph_of_edge_set(const EdgeBits& edges) {
  if (edges.none()) return std::nullopt;
  uint32_t used = 0;
  edges.for_each([&](int s) {
    auto [u, v] = slot_endpoints(s);
    used |= (1u << u) | (1u << v);
  });
  std::array<int, kMaxVertices> local{};
  int k = 0;
  for (int v = 0; v < kMaxVertices; ++v)
    if ((used >> v) & 1u) local[v] = k++;
  Graph g(k);
  edges.for_each([&](int s) {
    auto [u, v] = slot_endpoints(s);
    g.add_edge(local[u], local[v]);
  });
  return g;
}

// ---------------------------------------------------------------------------
// graph6 (printable-ASCII, one graph per line; bit-exact per the public
// format definition). n <= 16 keeps the size header to a single byte.

inline std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int bit = 5;
  char cur = 0;
  for (int s = 0; s < slot_count(g.n); ++s) {
    if (g.edges.test(s)) cur |= char(1 << bit);
    if (--bit < 0) {
      out.push_back(char(cur + 63));
      bit = 5;
      cur = 0;
    }
  }
  if (bit != 5) out.push_back(char(cur + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= text.size()) throw parse_error("graph6: empty input", pos);

  unsigned char c0 = static_cast<unsigned char>(text[pos]);
  if (c0 < 63 || c0 > 126) throw parse_error("graph6: bad size byte", pos);
  if (c0 == 126) throw parse_error("graph6: multi-byte order (n > 62) unsupported", pos);
  int n = c0 - 63;
  if (n < 1 || n > kMaxVertices)
    throw parse_error("graph6: order " + std::to_string(n) + " outside [1,16]", pos);
  ++pos;

  int nbits = slot_count(n);
  int nbytes = (nbits + 5) / 6;
  Graph g(n);
  for (int i = 0; i < nbytes; ++i, ++pos) {
    if (pos >= text.size()) throw parse_error("graph6: truncated bit vector", pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) throw parse_error("graph6: character out of range", pos);
    int v = c - 63;
    for (int b = 0; b < 6; ++b) {
      int s = i * 6 + b;
      bool bit = (v >> (5 - b)) & 1;
      if (s < nbits) {
        if (bit) {
          auto [x, y] = slot_endpoints(s);
          g.add_edge(x, y);
        }
      } else if (bit) {
        throw parse_error("graph6: nonzero padding bit", pos);
      }
    }
  }
  if (pos != text.size()) throw parse_error("graph6: trailing garbage", pos);
  return g;
}

// ---------------------------------------------------------------------------
// Standard families. Path P_k follows the k-edge convention: k+1 vertices.

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int k) {
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph star_graph(int k) {
  Graph g(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

inline Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle_graph: need k >= 3");
  Graph g(k);
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

inline Graph complete_bipartite_graph(int p, int q) {
  Graph g(p + q);
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) g.add_edge(u, v);
  return g;
}

// Complete (p,q)-split graph: clique X of size p, independent Y of size q,
// all X-Y edges present.
inline Graph split_complete_graph(int p, int q) {
  if (p < 0 || q < 0 || p + q < 1)
    throw std::invalid_argument("split_complete_graph: bad sizes");
  Graph g(p + q);
  for (int v = 1; v < p; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) g.add_edge(u, v);
  return g;
}

// New vertex attached to vertex 0 (e.g. triangle plus pendant vertex).
inline Graph with_pendant(const Graph& g) {
  Graph h(g.n + 1);
  g.edges.for_each([&](int s) {
    auto [u, v] = slot_endpoints(s);
    h.add_edge(u, v);
  });
  h.add_edge(0, g.n);
  return h;
}

// ---------------------------------------------------------------------------

// BFS two-coloring; witness is one side of the bipartition as a vertex mask.
inline bool is_bipartite(const Graph& g, uint32_t* side = nullptr) {
  std::array<int8_t, kMaxVertices> color;
  color.fill(-1);
  uint32_t left = 0;
  for (int start = 0; start < g.n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    left |= 1u << start;
    std::vector<int> queue{start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (uint16_t row = g.adj[v]; row; row &= uint16_t(row - 1)) {
        int u = std::countr_zero(row);
        if (color[u] < 0) {
          color[u] = int8_t(1 - color[v]);
          if (color[u] == 0) left |= 1u << u;
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  if (side) *side = left;
  return true;
}

}  // namespace tonal
