#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pga/errors.hpp"
#include "pga/finite_group.hpp"
#include "pga/number_theory.hpp"
#include "pga/power_graph.hpp"
#include "pga/weighted_graph.hpp"

namespace pga {

/// Partition of the power graph into maximal classes of vertices with equal
/// closed neighbourhoods. Classes are sorted internally and ordered by their
/// smallest vertex, which is also their id.
struct MenPartition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> weights;

  std::size_t size() const noexcept { return classes.size(); }
};

/// One node per class, weighted by class size; node i is class i.
struct QuotientGraph {
  WeightedGraph graph;
  std::vector<Vertex> representative;  // smallest member vertex per node

  std::size_t size() const noexcept { return graph.size(); }
};

inline MenPartition men_partition(const PowerGraph& pg) {
  MenPartition mp;
  mp.class_of.assign(pg.size(), 0);
  std::map<Bitset, std::size_t> by_row;
  for (Vertex v = 0; v < pg.size(); ++v) {
    auto [it, inserted] = by_row.try_emplace(pg.closed_row(v), mp.classes.size());
    if (inserted) mp.classes.emplace_back();
    mp.classes[it->second].push_back(v);
    mp.class_of[v] = it->second;
  }
  for (const auto& c : mp.classes) mp.weights.push_back(c.size());
  return mp;
}

/// Weighted quotient. Throws InternalError if two classes are neither fully
/// adjacent nor fully non-adjacent, which would mean `mp` is not a twin
/// partition of `pg`.
inline QuotientGraph build_quotient(const PowerGraph& pg, const MenPartition& mp) {
  std::vector<std::uint64_t> w(mp.weights.begin(), mp.weights.end());
  QuotientGraph q{WeightedGraph(std::move(w)), {}};
  for (const auto& c : mp.classes) q.representative.push_back(c.front());
  for (std::size_t a = 0; a < mp.size(); ++a) {
    for (std::size_t b = a + 1; b < mp.size(); ++b) {
      const bool first = pg.adjacent(mp.classes[a].front(), mp.classes[b].front());
      for (Vertex x : mp.classes[a])
        for (Vertex y : mp.classes[b])
          check_internal(pg.adjacent(x, y) == first,
                         "quotient is ill-defined: classes " + std::to_string(a) + " and " +
                             std::to_string(b) + " disagree on adjacency");
      if (first) q.graph.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return q;
}

/// The two shapes a twin class can take in a power graph: a generator set
/// gen(<a>), or a chain <a> - <a^(p^t)> inside a cyclic p-subgroup.
enum class MenType { Gen, Chain, Both, Neither };

inline const char* to_string(MenType t) {
  switch (t) {
    case MenType::Gen:
      return "gen";
    case MenType::Chain:
      return "chain";
    case MenType::Both:
      return "both";
    case MenType::Neither:
      return "neither";
  }
  return "?";
}

struct MenClassification {
  MenType type = MenType::Neither;
  std::optional<Element> gen_witness;  // K = gen(<a>)
  struct Chain {
    Element a;
    std::uint64_t p;
    unsigned t;
    unsigned n;  // o(a) = p^n
  };
  std::optional<Chain> chain_witness;  // K = <a> - <a^(p^t)>
};

namespace detail {

inline std::vector<Element> sorted_elements(const PowerGraph& pg, const std::vector<Vertex>& vs) {
  std::vector<Element> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(pg.vertices[v]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertex set of <a> minus the identity, sorted.
inline std::vector<Vertex> nontrivial_vertices(const FiniteGroup& g, const PowerGraph& pg, Element a) {
  std::vector<Vertex> out;
  for (Element y : cyclic_subgroup(g, a))
    if (y != FiniteGroup::identity()) out.push_back(pg.vertex_of(y));
  return out;
}

}  // namespace detail

/// Identifies which shape `members` (a twin class) has, with witnesses.
/// Candidate witnesses are members of maximal order, in ascending order.
///
/// For the chain shape, N[a^(p^t)] is compared as a vertex set with the
/// identity excluded; when a^(p^t) is the identity it has no vertex and the
/// inequality is taken to hold.
inline MenClassification classify_men_class(const FiniteGroup& g, const PowerGraph& pg,
                                            const std::vector<Vertex>& members) {
  MenClassification out;
  const auto K = detail::sorted_elements(pg, members);
  std::size_t max_order = 0;
  for (Element x : K) max_order = std::max(max_order, g.element_order(x));

  for (Element a : K) {
    if (g.element_order(a) != max_order) continue;
    if (!out.gen_witness && gen_set(g, a) == K) out.gen_witness = a;

    if (out.chain_witness) continue;
    const auto pp = nt::as_prime_power(max_order);
    if (!pp || pp->exponent < 2) continue;
    const std::uint64_t p = pp->prime;
    const unsigned n = pp->exponent;
    for (unsigned t = 2; t <= n; ++t) {
      const Element inner = g.power(a, nt::ipow(p, t));
      std::vector<Element> expect;
      const auto removed = cyclic_subgroup(g, inner);
      for (Element y : cyclic_subgroup(g, a))
        if (!std::binary_search(removed.begin(), removed.end(), y)) expect.push_back(y);
      if (expect != K) continue;
      const auto cyc = detail::nontrivial_vertices(g, pg, a);
      const Element upper = g.power(a, nt::ipow(p, t - 1));
      if (closed_neighborhood(pg, pg.vertex_of(upper)) != cyc) continue;
      if (inner != FiniteGroup::identity() && closed_neighborhood(pg, pg.vertex_of(inner)) == cyc) continue;
      out.chain_witness = MenClassification::Chain{a, p, t, n};
      break;
    }
  }
  if (out.gen_witness && out.chain_witness) out.type = MenType::Both;
  else if (out.gen_witness) out.type = MenType::Gen;
  else if (out.chain_witness) out.type = MenType::Chain;
  return out;
}

/// Element of maximal order in a class (smallest index among ties).
inline Element max_order_member(const FiniteGroup& g, const PowerGraph& pg, const std::vector<Vertex>& members) {
  Element best = pg.vertices[members.front()];
  for (Vertex v : members) {
    const Element x = pg.vertices[v];
    if (g.element_order(x) > g.element_order(best)) best = x;
  }
  return best;
}

/// Recovers o(x_M) for the class's maximal-order member x_M as one plus the
/// total weight of the classes inside <x_M>. Throws if a class straddles
/// <x_M> or the sum disagrees with the element order.
inline std::size_t reconstruct_order(const FiniteGroup& g, const PowerGraph& pg, const MenPartition& mp,
                                     std::size_t class_id) {
  const Element top = max_order_member(g, pg, mp.classes.at(class_id));
  const auto inside = detail::nontrivial_vertices(g, pg, top);
  std::vector<std::size_t> hits(mp.size(), 0);
  for (Vertex v : inside) ++hits[mp.class_of[v]];
  std::size_t total = 1;
  for (std::size_t c = 0; c < mp.size(); ++c) {
    if (hits[c] == 0) continue;
    check_internal(hits[c] == mp.weights[c], "class " + std::to_string(c) + " straddles the boundary of <" +
                                                  g.label(top) + ">");
    total += mp.weights[c];
  }
  check_internal(total == g.element_order(top), "reconstructed order " + std::to_string(total) +
                                                    " differs from o(" + g.label(top) + ") = " +
                                                    std::to_string(g.element_order(top)));
  return total;
}

/// Merges nodes of `wg` whose closed neighbourhoods coincide, summing their
/// weights. `members` receives the original nodes of each merged node.
inline WeightedGraph merge_closed_twins(const WeightedGraph& wg, std::vector<std::vector<Vertex>>* members = nullptr) {
  std::map<Bitset, std::size_t> by_row;
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::size_t> group_of(wg.size());
  for (Vertex v = 0; v < wg.size(); ++v) {
    Bitset r = wg.row(v);
    r.set(v);
    auto [it, inserted] = by_row.try_emplace(std::move(r), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(v);
    group_of[v] = it->second;
  }
  std::vector<std::uint64_t> w(groups.size(), 0);
  for (Vertex v = 0; v < wg.size(); ++v) w[group_of[v]] += wg.weight(v);
  WeightedGraph out(std::move(w));
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = a + 1; b < groups.size(); ++b)
      if (wg.adjacent(groups[a].front(), groups[b].front()))
        out.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  if (members) *members = std::move(groups);
  return out;
}

}  // namespace pga
