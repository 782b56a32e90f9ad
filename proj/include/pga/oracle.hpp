#pragma once

// Brute-force ground truth for vertex-weighted graphs. Shares no code with the
// twin-class / quotient machinery so that agreement between the two is
// meaningful.
//
// Search scheme: the root colouring is the coarsest equitable refinement of
// the weight colouring. A search-tree node individualises the smallest vertex
// of the first non-singleton cell and refines again. A fixed "left" path down
// the tree is compared against candidate "right" paths; two nodes are only
// explored together when their refinement traces agree, and every leaf map is
// re-verified edge by edge before it is accepted.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pga/bigint.hpp"
#include "pga/errors.hpp"
#include "pga/weighted_graph.hpp"

namespace pga::oracle {

struct Caps {
  std::size_t max_nodes = 40;
  std::uint64_t max_count = 10'000'000;        // explicit enumeration limit
  std::uint64_t max_search_nodes = 20'000'000;  // search-tree nodes per call
};

using Perm = std::vector<Vertex>;
using Coloring = std::vector<std::uint32_t>;
using Trace = std::vector<std::uint32_t>;

struct CountOutcome {
  std::optional<BigInt> count;
  std::string reason;  // set when count is empty
  bool known() const noexcept { return count.has_value(); }
};

struct IsoOutcome {
  bool isomorphic = false;
  Perm witness;  // a -> b node map when isomorphic
};

namespace detail {

inline std::uint32_t color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

/// Ranks weights into initial colours.
inline Coloring weight_coloring(const WeightedGraph& g) {
  std::vector<std::uint64_t> distinct = g.weights();
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring c(g.size());
  for (Vertex v = 0; v < g.size(); ++v)
    c[v] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), g.weight(v)) -
                                      distinct.begin());
  return c;
}

/// Iterates (own colour, sorted neighbour colours) signatures to a stable
/// colouring. Colours are ranks of signatures, so the result depends only on
/// the isomorphism type of (graph, colouring). Appends the signature multiset
/// of every round to `trace`.
inline Coloring refine(const WeightedGraph& g, Coloring colors, Trace& trace) {
  const std::size_t n = g.size();
  std::uint32_t k = color_count(colors);
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<Vertex> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(colors[v]);
      const auto& r = g.row(v);
      for (auto u = r.find_first(); u != Bitset::npos; u = r.find_next(u)) s.push_back(colors[u]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    Coloring next(n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
      trace.push_back(static_cast<std::uint32_t>(sig[order[i]].size()));
      trace.insert(trace.end(), sig[order[i]].begin(), sig[order[i]].end());
    }
    const std::uint32_t next_k = n == 0 ? 0 : rank + 1;
    trace.push_back(UINT32_MAX);
    colors = std::move(next);
    if (next_k == k) break;
    k = next_k;
  }
  return colors;
}

/// Gives v its own colour, placed just before the rest of its old cell.
inline Coloring individualize(const Coloring& colors, Vertex v) {
  Coloring out(colors.size());
  const std::uint32_t c = colors[v];
  for (std::size_t u = 0; u < colors.size(); ++u) {
    if (u == v) out[u] = c;
    else out[u] = colors[u] >= c ? colors[u] + 1 : colors[u];
  }
  return out;
}

/// Smallest colour whose cell has more than one vertex, or nullopt if discrete.
inline std::optional<std::uint32_t> target_cell(const Coloring& colors) {
  std::vector<std::uint32_t> sizes(color_count(colors), 0);
  for (auto c : colors) ++sizes[c];
  for (std::uint32_t c = 0; c < sizes.size(); ++c)
    if (sizes[c] > 1) return c;
  return std::nullopt;
}

inline std::vector<Vertex> cell(const Coloring& colors, std::uint32_t c) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < colors.size(); ++v)
    if (colors[v] == c) out.push_back(v);
  return out;
}

/// True when perm maps a onto b preserving weights and adjacency.
inline bool verify_map(const WeightedGraph& a, const WeightedGraph& b, const Perm& perm) {
  if (a.size() != b.size() || perm.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Vertex v = 0; v < a.size(); ++v) {
    if (perm[v] >= b.size() || hit[perm[v]]) return false;
    hit[perm[v]] = true;
    if (a.weight(v) != b.weight(perm[v])) return false;
  }
  for (Vertex x = 0; x < a.size(); ++x)
    for (Vertex y = x + 1; y < a.size(); ++y)
      if (a.adjacent(x, y) != b.adjacent(perm[x], perm[y])) return false;
  return true;
}

/// The fixed left path through the search tree of `g`.
struct LeftPath {
  std::vector<Coloring> colorings;  // depth + 1 entries, last is discrete
  std::vector<Trace> traces;        // trace leading to each coloring
  std::vector<std::uint32_t> targets;
  std::vector<Vertex> base;  // individualised vertex per level

  std::size_t depth() const noexcept { return targets.size(); }
};

class Search {
 public:
  Search(const WeightedGraph& left, const WeightedGraph& right, const Caps& caps)
      : left_(left), right_(right), caps_(caps) {
    if (left.size() > caps.max_nodes || right.size() > caps.max_nodes) {
      throw CapExceeded("graph has " + std::to_string(std::max(left.size(), right.size())) +
                        " nodes, above the oracle limit of " + std::to_string(caps.max_nodes));
    }
    Trace t;
    Coloring c = refine(left_, weight_coloring(left_), t);
    path_.colorings.push_back(c);
    path_.traces.push_back(std::move(t));
    while (auto target = target_cell(c)) {
      const Vertex v = cell(c, *target).front();
      path_.targets.push_back(*target);
      path_.base.push_back(v);
      Trace tv;
      c = refine(left_, individualize(c, v), tv);
      path_.colorings.push_back(c);
      path_.traces.push_back(std::move(tv));
    }
  }

  const LeftPath& path() const noexcept { return path_; }

  /// Root colouring of the right graph when its trace matches the left root.
  std::optional<Coloring> right_root() {
    std::vector<std::uint64_t> wl = left_.weights(), wr = right_.weights();
    std::sort(wl.begin(), wl.end());
    std::sort(wr.begin(), wr.end());
    if (wl != wr) return std::nullopt;
    Trace t;
    Coloring c = refine(right_, weight_coloring(right_), t);
    if (t != path_.traces[0]) return std::nullopt;
    return c;
  }

  /// Right child of `colors` (at `level`) that individualises y, if its
  /// trace matches the left path.
  std::optional<Coloring> child(const Coloring& colors, std::size_t level, Vertex y) {
    tick();
    Trace t;
    Coloring c = refine(right_, individualize(colors, y), t);
    if (t != path_.traces[level + 1]) return std::nullopt;
    return c;
  }

  /// Visits every leaf below (level, colors) that yields a verified map;
  /// `visit` returns false to stop. Returns false if stopped.
  template <class Visit>
  bool leaves(std::size_t level, const Coloring& colors, Visit&& visit) {
    if (level == path_.depth()) {
      const Coloring& lc = path_.colorings.back();
      Perm perm(left_.size());
      std::vector<Vertex> by_color(colors.size());
      for (Vertex y = 0; y < colors.size(); ++y) by_color[colors[y]] = y;
      for (Vertex x = 0; x < lc.size(); ++x) perm[x] = by_color[lc[x]];
      if (!verify_map(left_, right_, perm)) return true;
      return visit(std::move(perm));
    }
    for (Vertex y : cell(colors, path_.targets[level])) {
      auto next = child(colors, level, y);
      if (!next) continue;
      if (!leaves(level + 1, *next, visit)) return false;
    }
    return true;
  }

  std::optional<Perm> first_leaf(std::size_t level, const Coloring& colors) {
    std::optional<Perm> found;
    leaves(level, colors, [&](Perm p) {
      found = std::move(p);
      return false;
    });
    return found;
  }

 private:
  void tick() {
    if (++visited_ > caps_.max_search_nodes)
      throw CapExceeded("search exceeded " + std::to_string(caps_.max_search_nodes) + " tree nodes");
  }

  const WeightedGraph& left_;
  const WeightedGraph& right_;
  Caps caps_;
  LeftPath path_;
  std::uint64_t visited_ = 0;
};

inline std::vector<Vertex> orbit_of(Vertex v, const std::vector<Perm>& gens, std::size_t n) {
  std::vector<bool> in(n, false);
  std::vector<Vertex> orbit{v};
  in[v] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& g : gens)
      if (!in[g[orbit[i]]]) {
        in[g[orbit[i]]] = true;
        orbit.push_back(g[orbit[i]]);
      }
  return orbit;
}

struct ChainResult {
  BigInt order;
  std::vector<Perm> generators;
  std::vector<std::size_t> orbit_sizes;  // per base level
};

/// Orbit-stabiliser walk down the left path: at each level, the orbit of the
/// base vertex under the pointwise stabiliser of the previous base vertices.
/// One verified automorphism is kept per newly reached orbit point, so the
/// kept maps generate the whole group.
inline ChainResult stabilizer_chain(const WeightedGraph& g, const Caps& caps) {
  Search search(g, g, caps);
  const auto& path = search.path();
  ChainResult result{1, {}, {}};
  for (std::size_t level = 0; level < path.depth(); ++level) {
    const Coloring& here = path.colorings[level];
    const Vertex base = path.base[level];
    std::vector<Perm> level_gens;
    std::vector<bool> reached(g.size(), false);
    reached[base] = true;
    for (Vertex w : cell(here, path.targets[level])) {
      if (reached[w]) continue;
      auto next = search.child(here, level, w);
      if (!next) continue;
      auto perm = search.first_leaf(level + 1, *next);
      if (!perm) continue;
      level_gens.push_back(std::move(*perm));
      for (Vertex u : orbit_of(base, level_gens, g.size())) reached[u] = true;
    }
    const auto orbit = static_cast<std::size_t>(std::count(reached.begin(), reached.end(), true));
    result.orbit_sizes.push_back(orbit);
    result.order *= orbit;
    for (auto& p : level_gens) result.generators.push_back(std::move(p));
  }
  return result;
}

}  // namespace detail

/// Stable colouring of the root of the search tree (weights, then equitable
/// refinement). Nodes of different colours are never exchanged by an
/// automorphism.
inline std::vector<std::uint32_t> stable_coloring(const WeightedGraph& g) {
  Trace t;
  return detail::refine(g, detail::weight_coloring(g), t);
}

inline bool is_automorphism(const WeightedGraph& g, const Perm& perm) {
  return detail::verify_map(g, g, perm);
}

/// Exact |Aut(g)| for weight- and adjacency-preserving bijections, or an
/// explicit unknown when a cap is hit.
inline CountOutcome count_automorphisms(const WeightedGraph& g, const Caps& caps = {}) {
  try {
    return {detail::stabilizer_chain(g, caps).order, {}};
  } catch (const CapExceeded& e) {
    return {std::nullopt, e.what()};
  }
}

/// Every automorphism, in search order (the identity first). Throws
/// CapExceeded past caps.max_count maps.
inline std::vector<Perm> enumerate_automorphisms(const WeightedGraph& g, const Caps& caps = {}) {
  detail::Search search(g, g, caps);
  std::vector<Perm> out;
  const auto root = search.right_root();
  check_internal(root.has_value(), "graph does not match its own root trace");
  search.leaves(0, *root, [&](Perm p) {
    if (out.size() >= caps.max_count)
      throw CapExceeded("more than " + std::to_string(caps.max_count) + " automorphisms");
    out.push_back(std::move(p));
    return true;
  });
  return out;
}

/// Weighted-graph isomorphism test; the witness maps a's nodes to b's and has
/// been re-verified.
inline IsoOutcome are_isomorphic(const WeightedGraph& a, const WeightedGraph& b, const Caps& caps = {}) {
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return {};
  detail::Search search(a, b, caps);
  const auto root = search.right_root();
  if (!root) return {};
  auto perm = search.first_leaf(0, *root);
  if (!perm) return {};
  check_internal(detail::verify_map(a, b, *perm), "isomorphism witness failed re-verification");
  return {true, std::move(*perm)};
}

/// Orbits of Aut(g) on nodes; each orbit sorted, ordered by smallest node.
inline std::vector<std::vector<Vertex>> vertex_orbits(const WeightedGraph& g, const Caps& caps = {}) {
  const auto chain = detail::stabilizer_chain(g, caps);
  std::vector<std::int64_t> owner(g.size(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (owner[v] >= 0) continue;
    auto orbit = detail::orbit_of(v, chain.generators, g.size());
    std::sort(orbit.begin(), orbit.end());
    for (Vertex u : orbit) owner[u] = static_cast<std::int64_t>(out.size());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace pga::oracle
