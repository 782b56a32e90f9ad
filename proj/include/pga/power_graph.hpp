#pragma once

#include <string>
#include <vector>

#include "pga/errors.hpp"
#include "pga/finite_group.hpp"
#include "pga/weighted_graph.hpp"

namespace pga {

/// Undirected power graph on the nontrivial elements of a group: x -- y iff
/// x != y and one is a power of the other. Vertex v stands for element
/// vertices[v]; vertices are the non-identity elements in ascending order.
struct PowerGraph {
  std::vector<Element> vertices;
  std::vector<Bitset> adjacency;
  std::vector<std::vector<Vertex>> neighbor_lists;
  std::string group_ref;

  std::size_t size() const noexcept { return vertices.size(); }
  bool adjacent(Vertex a, Vertex b) const { return adjacency[a].test(b); }
  std::size_t degree(Vertex v) const { return neighbor_lists[v].size(); }

  /// Vertex of a non-identity element.
  Vertex vertex_of(Element x) const {
    check_internal(x != FiniteGroup::identity() && x <= vertices.size(), "identity has no vertex");
    return static_cast<Vertex>(x - 1);
  }

  /// N[v] as a bitset over vertices.
  Bitset closed_row(Vertex v) const {
    Bitset r = adjacency[v];
    r.set(v);
    return r;
  }
};

inline PowerGraph build_power_graph(const FiniteGroup& g) {
  if (g.size() < 2) throw SpecError("the trivial group has an empty power graph");
  PowerGraph pg;
  const std::size_t n = g.size() - 1;
  pg.group_ref = g.description();
  pg.vertices.reserve(n);
  for (Element x = 1; x < g.size(); ++x) pg.vertices.push_back(x);
  pg.adjacency.assign(n, Bitset(n));
  for (Element x = 1; x < g.size(); ++x) {
    for (Element y : powers(g, x)) {
      if (y == FiniteGroup::identity() || y == x) continue;
      pg.adjacency[x - 1].set(y - 1);
      pg.adjacency[y - 1].set(x - 1);
    }
  }
  pg.neighbor_lists.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& r = pg.adjacency[v];
    for (auto u = r.find_first(); u != Bitset::npos; u = r.find_next(u))
      pg.neighbor_lists[v].push_back(static_cast<Vertex>(u));
  }
  return pg;
}

/// N[v] = {v} together with its neighbours, sorted.
inline std::vector<Vertex> closed_neighborhood(const PowerGraph& pg, Vertex v) {
  std::vector<Vertex> out = pg.neighbor_lists[v];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline WeightedGraph as_weighted_graph(const PowerGraph& pg) {
  WeightedGraph wg(pg.size());
  for (Vertex v = 0; v < pg.size(); ++v)
    for (Vertex u : pg.neighbor_lists[v])
      if (u > v) wg.add_edge(v, u);
  return wg;
}

/// Components ordered by smallest vertex, each sorted.
inline std::vector<std::vector<Vertex>> connected_components(const PowerGraph& pg) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(pg.size(), false);
  for (Vertex s = 0; s < pg.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : pg.neighbor_lists[v]) {
        if (seen[u]) continue;
        seen[u] = true;
        comp.push_back(u);
        stack.push_back(u);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace pga
