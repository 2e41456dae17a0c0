// spectra.hpp
// Cut and induced-edge spectra, and the structural deciders built on
// them: a graph is r-tonal iff some bipartition cut and some induced
// edge count both land in {r, e-r}; balanceable is the r = floor(e/2)
// case; omnitonal requires both spectra to cover all of [0, e].
//
// Spectra are computed by exhaustive subset enumeration with incremental
// edge counting; 2^16 subsets at the vertex cap needs no pruning.
// Witnesses are the numerically least achieving vertex masks.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tonal/graph.hpp"

namespace tonal {

struct Spectrum {
  int max = 0;                   // e(G)
  std::vector<uint8_t> achieved; // flag per value in [0, max]
  std::vector<int32_t> witness;  // least achieving vertex mask, -1 if absent

  bool contains(int r) const {
    return r >= 0 && r <= max && achieved[size_t(r)] != 0;
  }
  bool full() const {
    for (int r = 0; r <= max; ++r)
      if (!achieved[size_t(r)]) return false;
    return true;
  }
};

// achieved = { e(X, V\X) } over all bipartitions; witness X is the side
// not containing the last vertex, so each bipartition appears once.
inline Spectrum cut_spectrum(const Graph& g) {
  int e = g.edge_count();
  Spectrum sp{e, std::vector<uint8_t>(size_t(e) + 1, 0),
              std::vector<int32_t>(size_t(e) + 1, -1)};
  uint32_t lim = g.n >= 1 ? (1u << (g.n - 1)) : 1u;
  std::vector<uint8_t> cut(lim, 0);
  for (uint32_t mask = 0; mask < lim; ++mask) {
    int value = 0;
    if (mask != 0) {
      int v = std::countr_zero(mask);
      uint32_t rest = mask & (mask - 1);
      value = cut[rest] + g.degree(v) - 2 * std::popcount(g.adj[v] & rest);
      cut[mask] = uint8_t(value);
    }
    if (!sp.achieved[size_t(value)]) {
      sp.achieved[size_t(value)] = 1;
      sp.witness[size_t(value)] = int32_t(mask);
    }
  }
  return sp;
}

// achieved = { e(G[W]) } over all W subsets of V.
inline Spectrum induced_spectrum(const Graph& g) {
  int e = g.edge_count();
  Spectrum sp{e, std::vector<uint8_t>(size_t(e) + 1, 0),
              std::vector<int32_t>(size_t(e) + 1, -1)};
  uint32_t lim = 1u << g.n;
  std::vector<uint8_t> cnt(lim, 0);
  for (uint32_t mask = 0; mask < lim; ++mask) {
    int value = 0;
    if (mask != 0) {
      int v = std::countr_zero(mask);
      uint32_t rest = mask & (mask - 1);
      value = cnt[rest] + std::popcount(g.adj[v] & rest);
      cnt[mask] = uint8_t(value);
    }
    if (!sp.achieved[size_t(value)]) {
      sp.achieved[size_t(value)] = 1;
      sp.witness[size_t(value)] = int32_t(mask);
    }
  }
  return sp;
}

struct TonalWitness {
  int cut_value = -1;
  int32_t cut_side = -1;      // vertex mask X
  int induced_value = -1;
  int32_t induced_set = -1;   // vertex mask W
};

// Both a cut and an induced count in {r, e-r} must exist.
inline bool is_r_tonal(const Graph& g, int r, TonalWitness* w = nullptr) {
  int e = g.edge_count();
  if (r < 0 || r > e / 2)
    throw std::invalid_argument("is_r_tonal: need 0 <= r <= floor(e/2)");
  Spectrum cs = cut_spectrum(g), is = induced_spectrum(g);
  int lo = r, hi = e - r;
  int cv = cs.contains(lo) ? lo : (cs.contains(hi) ? hi : -1);
  int iv = is.contains(lo) ? lo : (is.contains(hi) ? hi : -1);
  if (cv < 0 || iv < 0) return false;
  if (w) *w = {cv, cs.witness[size_t(cv)], iv, is.witness[size_t(iv)]};
  return true;
}

// r = floor(e/2); for odd e the pair {floor, ceil} is exactly {r, e-r}.
inline bool is_balanceable(const Graph& g, TonalWitness* w = nullptr) {
  return is_r_tonal(g, g.edge_count() / 2, w);
}

inline bool is_omnitonal(const Graph& g) {
  return cut_spectrum(g).full() && induced_spectrum(g).full();
}

struct TonalityReport {
  std::string graph6;
  int n = 0;
  int e = 0;
  Spectrum cut;
  Spectrum induced;
  bool balanceable = false;
  bool omnitonal = false;
  bool bipartite = false;
  std::vector<uint8_t> r_tonal;  // index r in [1, floor(e/2)]; index 0 unused
};

inline TonalityReport tonal_report(const Graph& g) {
  TonalityReport rep;
  rep.graph6 = to_graph6(g);
  rep.n = g.n;
  rep.e = g.edge_count();
  rep.cut = cut_spectrum(g);
  rep.induced = induced_spectrum(g);
  rep.bipartite = is_bipartite(g);
  rep.r_tonal.assign(size_t(rep.e / 2) + 1, 0);
  auto hits = [&](int r) {
    int lo = r, hi = rep.e - r;
    return (rep.cut.contains(lo) || rep.cut.contains(hi)) &&
           (rep.induced.contains(lo) || rep.induced.contains(hi));
  };
  for (int r = 1; r <= rep.e / 2; ++r) rep.r_tonal[size_t(r)] = hits(r) ? 1 : 0;
  rep.balanceable = hits(rep.e / 2);
  rep.omnitonal = rep.cut.full() && rep.induced.full();
  return rep;
}

}  // namespace tonal
