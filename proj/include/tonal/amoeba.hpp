// amoeba.hpp
// Edge-replacement moves between copies of a pattern in K_n, and the
// reconfiguration graph they generate: nodes are all copies (as edge
// sets), two copies adjacent when they differ by one replaced edge. A
// graph behaves like an amoeba at a given n when that graph is
// connected. Verdicts are reported per tested n only; connectivity on a
// finite window never certifies the for-all-n property.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "tonal/colorings.hpp"
#include "tonal/embeddings.hpp"
#include "tonal/errors.hpp"

namespace tonal {

inline constexpr uint64_t kDefaultReconfigBudget = 2'000'000;

// All edge sets obtained from `copy` by removing one of its slots and
// adding one K_n slot outside it, keeping the result isomorphic to g.
inline std::vector<EdgeBits> edge_replacements(const EdgeBits& copy, const Graph& g,
                                               int n) {
  auto own = graph_of_edge_set(copy);
  auto pattern = graph_of_edge_set(g.edges);
  if (!pattern)
    throw std::invalid_argument("edge_replacements: pattern has no edges");
  if (!own || !isomorphic(*own, *pattern))
    throw std::invalid_argument("edge_replacements: copy is not a copy of the pattern");
  const std::string& want = canonical_form(*pattern).code;

  std::vector<EdgeBits> out;
  EdgeBits candidates_add = EdgeBits::universe(n) - copy;
  copy.for_each([&](int removed) {
    candidates_add.for_each([&](int added) {
      EdgeBits h = copy;
      h.reset(removed);
      h.set(added);
      auto hg = graph_of_edge_set(h);
      if (hg && hg->n == pattern->n && canonical_form(*hg).code == want)
        out.push_back(h);
    });
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Connected components of the reconfiguration graph via union-find over
// the sorted copy list; membership lookup doubles as the isomorphism
// check, since the node set is exactly the set of copies.
struct ReconfComponents {
  std::vector<EdgeBits> nodes;  // ascending
  std::vector<uint32_t> root;

  uint32_t find(uint32_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  }

  ReconfComponents(const Graph& g, int n, uint64_t budget) {
    nodes = enumerate_embeddings(g, n, budget);
    root.resize(nodes.size());
    for (uint32_t i = 0; i < nodes.size(); ++i) root[i] = i;

    std::unordered_map<EdgeBits, uint32_t, EdgeBitsHash> index;
    index.reserve(nodes.size() * 2);
    for (uint32_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);

    EdgeBits universe = EdgeBits::universe(n);
    for (uint32_t i = 0; i < nodes.size(); ++i) {
      const EdgeBits& copy = nodes[i];
      EdgeBits adds = universe - copy;
      copy.for_each([&](int removed) {
        EdgeBits base = copy;
        base.reset(removed);
        adds.for_each([&](int added) {
          EdgeBits h = base;
          h.set(added);
          auto it = index.find(h);
          if (it != index.end()) {
            uint32_t a = find(i), b = find(it->second);
            if (a != b) root[std::max(a, b)] = std::min(a, b);
          }
        });
      });
    }
  }
};

}  // namespace detail

struct AmoebaAtResult {
  bool connected = false;
  uint64_t num_copies = 0;
  uint32_t num_components = 0;
  std::vector<EdgeBits> representatives;  // least copy of each component (first few)
};

inline AmoebaAtResult is_amoeba_at(const Graph& g, int n,
                                   uint64_t budget = kDefaultReconfigBudget,
                                   size_t max_representatives = 4) {
  auto pattern = graph_of_edge_set(g.edges);
  if (!pattern || pattern->n != g.n)
    throw std::invalid_argument("is_amoeba_at: pattern must have edges and no isolated vertices");
  if (!(g.n < n && n <= kMaxVertices))
    throw std::invalid_argument("is_amoeba_at: need pattern order < n <= 16");

  detail::ReconfComponents rc(g, n, budget);
  AmoebaAtResult res;
  res.num_copies = rc.nodes.size();
  for (uint32_t i = 0; i < rc.nodes.size(); ++i) {
    if (rc.find(i) == i) {
      ++res.num_components;
      if (res.representatives.size() < max_representatives)
        res.representatives.push_back(rc.nodes[i]);
    }
  }
  res.connected = res.num_components == 1;
  return res;
}

struct AmoebaVerdict {
  std::string graph6;
  int n_min = 0, n_max = 0;
  struct PerN {
    int n;
    bool connected;
    uint64_t num_copies;
    uint32_t num_components;
  };
  std::vector<PerN> per_n;
  bool connected_all = false;  // "amoeba-like on the tested range" only
};

inline AmoebaVerdict amoeba_verdict(const Graph& g, int n_min, int n_max,
                                    uint64_t budget = kDefaultReconfigBudget) {
  if (!(g.n < n_min && n_min <= n_max && n_max <= kMaxVertices))
    throw std::invalid_argument("amoeba_verdict: need pattern order < n_min <= n_max <= 16");
  AmoebaVerdict v;
  v.graph6 = to_graph6(g);
  v.n_min = n_min;
  v.n_max = n_max;
  v.connected_all = true;
  for (int n = n_min; n <= n_max; ++n) {
    auto at = is_amoeba_at(g, n, budget);
    v.per_n.push_back({n, at.connected, at.num_copies, at.num_components});
    v.connected_all = v.connected_all && at.connected;
  }
  return v;
}

// One chain of single-edge replacements between two copies, with the tone
// (red count, blue count) of every intermediate copy under a coloring.
// Consecutive tones differ by at most one, so the chain interpolates.
struct ToneChain {
  std::vector<EdgeBits> copies;  // G_0 .. G_t
  struct Step {
    int removed_slot;
    int added_slot;
  };
  std::vector<Step> steps;       // t entries
  struct Tone {
    int red;
    int blue;
  };
  std::vector<Tone> tones;       // t+1 entries, tones[i] for copies[i]
};

struct InterpolationResult {
  bool connected = false;  // false: from and to lie in different components
  ToneChain chain;
};

inline InterpolationResult interpolation_chain(const Coloring& c, const Graph& g,
                                               const EdgeBits& from, const EdgeBits& to,
                                               uint64_t budget = kDefaultReconfigBudget) {
  auto pattern = graph_of_edge_set(g.edges);
  if (!pattern)
    throw std::invalid_argument("interpolation_chain: pattern has no edges");
  int e = pattern->edge_count();

  std::vector<EdgeBits> nodes = enumerate_embeddings(g, c.n, budget);
  std::unordered_map<EdgeBits, uint32_t, EdgeBitsHash> index;
  index.reserve(nodes.size() * 2);
  for (uint32_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  auto at = [&](const EdgeBits& b, const char* which) {
    auto it = index.find(b);
    if (it == index.end())
      throw std::invalid_argument(std::string("interpolation_chain: '") + which +
                                  "' is not a copy of the pattern in K_n");
    return it->second;
  };
  uint32_t src = at(from, "from"), dst = at(to, "to");

  // BFS with parent tracking; neighbors generated in deterministic slot order.
  std::vector<int64_t> parent(nodes.size(), -1);
  parent[src] = int64_t(src);
  std::queue<uint32_t> queue;
  queue.push(src);
  EdgeBits universe = EdgeBits::universe(c.n);
  while (!queue.empty() && parent[dst] < 0) {
    uint32_t cur = queue.front();
    queue.pop();
    const EdgeBits copy = nodes[cur];
    EdgeBits adds = universe - copy;
    copy.for_each([&](int removed) {
      EdgeBits base = copy;
      base.reset(removed);
      adds.for_each([&](int added) {
        EdgeBits h = base;
        h.set(added);
        auto it = index.find(h);
        if (it != index.end() && parent[it->second] < 0) {
          parent[it->second] = int64_t(cur);
          queue.push(it->second);
        }
      });
    });
  }

  InterpolationResult res;
  if (parent[dst] < 0) return res;  // different components, not an error
  res.connected = true;

  std::vector<uint32_t> path{dst};
  while (path.back() != src) path.push_back(uint32_t(parent[path.back()]));
  std::reverse(path.begin(), path.end());

  for (uint32_t id : path) {
    const EdgeBits& copy = nodes[id];
    int r = (copy & c.red).count();
    res.chain.copies.push_back(copy);
    res.chain.tones.push_back({r, e - r});
  }
  for (size_t i = 1; i < path.size(); ++i) {
    EdgeBits prev = nodes[path[i - 1]], next = nodes[path[i]];
    res.chain.steps.push_back({(prev - next).first(), (next - prev).first()});
  }
  return res;
}

}  // namespace tonal
