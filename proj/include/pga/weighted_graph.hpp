#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pga/errors.hpp"

namespace pga {

using Vertex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph with a positive weight per node.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n, std::uint64_t weight = 1)
      : adj_(n, Bitset(n)), weights_(n, weight) {
    if (weight == 0) throw InternalError("weights must be positive");
  }
  explicit WeightedGraph(std::vector<std::uint64_t> weights)
      : adj_(weights.size(), Bitset(weights.size())), weights_(std::move(weights)) {
    for (auto w : weights_)
      if (w == 0) throw InternalError("weights must be positive");
  }

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t weight(Vertex v) const { return weights_[v]; }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }

  void add_edge(Vertex a, Vertex b) {
    if (a == b) throw InternalError("loops are not allowed");
    adj_[a].set(b);
    adj_[b].set(a);
  }

  bool adjacent(Vertex a, Vertex b) const { return adj_[a].test(b); }
  const Bitset& row(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].count(); }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (auto u = adj_[v].find_first(); u != Bitset::npos; u = adj_[v].find_next(u))
      out.push_back(static_cast<Vertex>(u));
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
  }

  /// Subgraph on `nodes`, relabelled 0..k-1 in the given order.
  WeightedGraph induced(const std::vector<Vertex>& nodes) const {
    std::vector<std::uint64_t> w;
    w.reserve(nodes.size());
    for (Vertex v : nodes) w.push_back(weights_[v]);
    WeightedGraph out(std::move(w));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j)
        if (adjacent(nodes[i], nodes[j])) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
  }

  /// Image of the graph under the relabelling v -> perm[v].
  WeightedGraph relabelled(const std::vector<Vertex>& perm) const {
    std::vector<std::uint64_t> w(size());
    for (Vertex v = 0; v < size(); ++v) w[perm[v]] = weights_[v];
    WeightedGraph out(std::move(w));
    for (Vertex a = 0; a < size(); ++a)
      for (Vertex b = a + 1; b < size(); ++b)
        if (adjacent(a, b)) out.add_edge(perm[a], perm[b]);
    return out;
  }

 private:
  std::vector<Bitset> adj_;
  std::vector<std::uint64_t> weights_;
};

/// Connected components, each sorted, ordered by smallest node.
inline std::vector<std::vector<Vertex>> connected_components(const WeightedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.size(), false);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s}, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
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
