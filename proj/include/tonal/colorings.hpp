// colorings.hpp
// Red/blue colorings of E(K_n) as (n, red edge set); blue is the
// complement. Named constructions from the extremal families, tone-set
// search over colored hosts, and detection of type-A / type-B colored
// K_{2t} subcliques.
//
// Wire form of a coloring (frozen): "<n>;<hex>" where <hex> is the red
// bitmap in colex slot order, lowercase, no leading zeros.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tonal/embeddings.hpp"
#include "tonal/errors.hpp"
#include "tonal/graph.hpp"

namespace tonal {

struct Coloring {
  int n = 0;
  EdgeBits red;

  Coloring() = default;
  Coloring(int n_, EdgeBits red_) : n(n_), red(red_) {
    if (n_ < 1 || n_ > kMaxVertices)
      throw std::invalid_argument("Coloring: n outside [1,16]");
    if (!(red_ - EdgeBits::universe(n_)).none())
      throw std::invalid_argument("Coloring: red bits beyond K_n slots");
  }

  EdgeBits blue() const { return EdgeBits::universe(n) - red; }
  int red_count() const { return red.count(); }
  int blue_count() const { return slot_count(n) - red.count(); }
  int min_color_count() const { return std::min(red_count(), blue_count()); }
  Coloring complement() const { return Coloring(n, blue()); }
};

inline std::string serialize_coloring(const Coloring& c) {
  return std::to_string(c.n) + ";" + c.red.to_hex();
}

inline Coloring parse_coloring(const std::string& line) {
  auto sep = line.find(';');
  if (sep == std::string::npos) throw parse_error("coloring: missing ';'", line.size());
  int n;
  try {
    size_t used = 0;
    n = std::stoi(line.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw parse_error("coloring: bad vertex count", 0);
  }
  if (n < 1 || n > kMaxVertices) throw parse_error("coloring: n outside [1,16]", 0);
  EdgeBits red;
  try {
    red = EdgeBits::from_hex(line.substr(sep + 1));
  } catch (const std::exception& ex) {
    throw parse_error(std::string("coloring: ") + ex.what(), sep + 1);
  }
  if (!(red - EdgeBits::universe(n)).none())
    throw parse_error("coloring: red bitmap beyond K_n slots", sep + 1);
  return Coloring(n, red);
}

// ---------------------------------------------------------------------------
// Named constructions.

// Red edges form the clique on {0..t-1}.
inline Coloring type_A_coloring(int n, int t) {
  if (t < 1 || t >= n || n > kMaxVertices)
    throw std::invalid_argument("type_A_coloring: need 1 <= t < n <= 16");
  EdgeBits red;
  for (int v = 1; v < t; ++v)
    for (int u = 0; u < v; ++u) red.set(edge_slot(u, v));
  return Coloring(n, red);
}

// Red edges form the complete bipartite K_{t,n-t} between {0..t-1} and the rest.
inline Coloring type_B_coloring(int n, int t) {
  if (t < 1 || t >= n || n > kMaxVertices)
    throw std::invalid_argument("type_B_coloring: need 1 <= t < n <= 16");
  EdgeBits red;
  for (int u = 0; u < t; ++u)
    for (int v = t; v < n; ++v) red.set(edge_slot(u, v));
  return Coloring(n, red);
}

enum class TypeKind { A, B };

// All t for which the type-A(t) (clique sizes C(t,2) = C(n,2)/2) or
// type-B(t) (cut sizes t(n-t) = C(n,2)/2) coloring of K_n is exactly
// balanced. Pure arithmetic, no vertex cap.
inline std::vector<long long> balanced_type_params(long long n, TypeKind kind) {
  std::vector<long long> out;
  if (n < 2) return out;
  long long total = n * (n - 1) / 2;
  if (total % 2 != 0) return out;
  long long half = total / 2;
  for (long long t = 1; t < n; ++t) {
    long long red = kind == TypeKind::A ? t * (t - 1) / 2 : t * (n - t);
    if (red == half) out.push_back(t);
  }
  return out;
}

// Red = complete (p, n-p)-split graph; optionally one extra red edge inside
// the independent part (the least slot there).
inline Coloring split_graph_coloring(int n, int p, bool extra_edge) {
  if (p < 0 || p >= n || n > kMaxVertices)
    throw std::invalid_argument("split_graph_coloring: need 0 <= p < n <= 16");
  if (extra_edge && n - p < 2)
    throw std::invalid_argument("split_graph_coloring: extra edge needs n-p >= 2");
  EdgeBits red;
  for (int v = 1; v < p; ++v)
    for (int u = 0; u < v; ++u) red.set(edge_slot(u, v));
  for (int u = 0; u < p; ++u)
    for (int v = p; v < n; ++v) red.set(edge_slot(u, v));
  if (extra_edge) red.set(edge_slot(p, p + 1));
  return Coloring(n, red);
}

// Extremal red graphs that keep some star tone missing: empty (k=1), a
// maximum matching (k=2), a Hamilton cycle as the union-of-cycles
// representative (k=3), the complete (k-2, n-k+2)-split graph (k >= 4).
inline Coloring ot_star_extremal(int n, int k) {
  if (k < 1) throw std::invalid_argument("ot_star_extremal: need k >= 1");
  if (n < 4 * k || n > kMaxVertices)
    throw std::invalid_argument("ot_star_extremal: need 4k <= n <= 16");
  EdgeBits red;
  if (k == 1) {
    // empty
  } else if (k == 2) {
    for (int i = 0; i + 1 < n; i += 2) red.set(edge_slot(i, i + 1));
  } else if (k == 3) {
    for (int i = 0; i < n; ++i) red.set(edge_slot(i, (i + 1) % n));
  } else {
    return split_graph_coloring(n, k - 2, false);
  }
  return Coloring(n, red);
}

// Is the red graph a member of the k=3 extremal family (disjoint union of
// cycles covering all n vertices, i.e. 2-regular)?
inline bool is_two_regular(const Coloring& c) {
  for (int v = 0; v < c.n; ++v)
    if ((c.red & vertex_slots(v, c.n)).count() != 2) return false;
  return true;
}

// Red = floor(n/4) vertex-disjoint C_4's plus J on the leftover vertices,
// J in {empty, K_1, K_2, P_2} by n mod 4; edge counts match n for
// n = 0 mod 4 and n-1 otherwise.
inline Coloring bal_K4_extremal(int n) {
  if (n < 5 || n > kMaxVertices)
    throw std::invalid_argument("bal_K4_extremal: need 5 <= n <= 16");
  EdgeBits red;
  int q = n / 4;
  for (int i = 0; i < q; ++i) {
    int b = 4 * i;
    red.set(edge_slot(b, b + 1));
    red.set(edge_slot(b + 1, b + 2));
    red.set(edge_slot(b + 2, b + 3));
    red.set(edge_slot(b, b + 3));
  }
  int rest = 4 * q;
  switch (n % 4) {
    case 0: case 1: break;                       // J empty or a lone vertex
    case 2: red.set(edge_slot(rest, rest + 1)); break;       // J = K_2
    case 3: red.set(edge_slot(rest, rest + 1));              // J = P_2
            red.set(edge_slot(rest + 1, rest + 2)); break;
  }
  return Coloring(n, red);
}

// ---------------------------------------------------------------------------
// Pattern search in a colored host.

struct ToneSet {
  int e = 0;                      // pattern edge count
  std::vector<uint8_t> achieved;  // flag per r in [0, e]
  std::vector<EdgeBits> witness;  // one embedding per achieved r

  bool contains(int r) const {
    return r >= 0 && r <= e && achieved[size_t(r)] != 0;
  }
  bool full() const {
    for (int r = 0; r <= e; ++r)
      if (!achieved[size_t(r)]) return false;
    return true;
  }
};

// achieved = { |copy & red| : copy of g in K_n }, one witness per tone
// (the least bitmap, since embeddings come sorted).
inline ToneSet tone_set(const Coloring& c, const Graph& g,
                        uint64_t budget = kDefaultEmbeddingBudget) {
  if (g.n > c.n) throw std::invalid_argument("tone_set: pattern larger than host");
  int e = g.edge_count();
  ToneSet ts{e, std::vector<uint8_t>(size_t(e) + 1, 0),
             std::vector<EdgeBits>(size_t(e) + 1)};
  for (const EdgeBits& copy : enumerate_embeddings(g, c.n, budget)) {
    int r = (copy & c.red).count();
    if (!ts.achieved[size_t(r)]) {
      ts.achieved[size_t(r)] = 1;
      ts.witness[size_t(r)] = copy;
    }
  }
  return ts;
}

// Balanced copy: tone e/2 for even e; for odd e either tone in
// {floor, ceil} by default, both when `strong`.
inline bool contains_balanced(const Coloring& c, const Graph& g, bool strong = false,
                              std::vector<EdgeBits>* witnesses = nullptr,
                              uint64_t budget = kDefaultEmbeddingBudget) {
  ToneSet ts = tone_set(c, g, budget);
  int lo = ts.e / 2, hi = (ts.e + 1) / 2;
  bool found = strong ? (ts.contains(lo) && ts.contains(hi))
                      : (ts.contains(lo) || ts.contains(hi));
  if (found && witnesses) {
    witnesses->clear();
    if (ts.contains(lo)) witnesses->push_back(ts.witness[size_t(lo)]);
    if (hi != lo && ts.contains(hi)) witnesses->push_back(ts.witness[size_t(hi)]);
  }
  return found;
}

struct TypeABHit {
  TypeKind kind;
  uint32_t vertices;  // the 2t-subset, as a vertex mask
};

namespace detail {

// Exact equality against the two templates on a 2t-subset. A
// monochromatic subset counts as type A: the other color's K_t side is
// degenerate, matching how a monochromatic K_{2q} is used as progress
// toward a type-A copy.
inline std::optional<TypeKind> classify_2t_subset(const Coloring& c, uint32_t S,
                                                  int t) {
  EdgeBits inside = slots_within(S, c.n);
  EdgeBits red_in = c.red & inside;
  int total = inside.count();
  int rc = red_in.count();
  if (rc == 0 || rc == total) return TypeKind::A;

  for (int color = 0; color < 2; ++color) {
    EdgeBits own = color == 0 ? red_in : inside - red_in;
    // clique template: exactly the edges inside some t-subset
    if (own.count() == t * (t - 1) / 2) {
      uint32_t T = 0;
      own.for_each([&](int s) {
        auto [u, v] = slot_endpoints(s);
        T |= (1u << u) | (1u << v);
      });
      if (std::popcount(T) == t && own == slots_within(T, c.n))
        return TypeKind::A;
    }
    // complete bipartite template: exactly the cut of a t/t split
    if (own.count() == t * t) {
      int v0 = std::countr_zero(S);
      uint32_t side = 0;
      EdgeBits v0_edges = own & vertex_slots(v0, c.n);
      for (uint32_t rest = S; rest; rest &= rest - 1) {
        int u = std::countr_zero(rest);
        if (u != v0 && !v0_edges.test(edge_slot(u, v0))) side |= 1u << u;
      }
      side |= 1u << v0;
      if (std::popcount(side) == t &&
          own == inside - slots_within(side, c.n) - slots_within(S & ~side, c.n))
        return TypeKind::B;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// First (in ascending vertex-mask order) 2t-subset whose induced coloring
// is type A or type B.
inline std::optional<TypeABHit> find_type_AB_clique(const Coloring& c, int t) {
  if (t < 1 || 2 * t > c.n)
    throw std::invalid_argument("find_type_AB_clique: need 1 <= 2t <= n");
  int k = 2 * t;
  uint32_t S = (1u << k) - 1;
  uint32_t lim = 1u << c.n;
  while (S < lim) {
    if (auto kind = detail::classify_2t_subset(c, S, t))
      return TypeABHit{*kind, S};
    // next k-subset mask (Gosper)
    uint32_t lsb = S & (~S + 1);
    uint32_t ripple = S + lsb;
    S = ripple | (((S ^ ripple) >> 2) / lsb);
  }
  return std::nullopt;
}

}  // namespace tonal
