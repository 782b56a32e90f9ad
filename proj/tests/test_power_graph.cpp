#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace pga;

namespace {

PowerGraph graph_of(const std::string& spec) { return build_power_graph(realize(parse_group_spec(spec))); }

}  // namespace

TEST(PowerGraph, CyclicPrimePowerIsComplete) {
  const auto pg = graph_of("Z(4)");
  ASSERT_EQ(pg.size(), 3u);
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b) EXPECT_EQ(pg.adjacent(a, b), a != b);
  for (const char* s : {"Z(2)", "Z(8)", "Z(9)", "Z(25)", "Z(27)"}) {
    const auto g = graph_of(s);
    for (Vertex v = 0; v < g.size(); ++v) EXPECT_EQ(g.degree(v) + 1, g.size()) << s;
  }
}

TEST(PowerGraph, KleinFourIsEmpty) {
  const auto pg = graph_of("Ab[2,2]");
  ASSERT_EQ(pg.size(), 3u);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(pg.degree(v), 0u);
}

TEST(PowerGraph, Sym3) {
  const auto g = realize(GroupSpec::symmetric(3));
  const auto pg = build_power_graph(g);
  std::size_t edges = 0;
  for (Vertex v = 0; v < pg.size(); ++v) {
    const Element x = pg.vertices[v];
    if (g.element_order(x) == 3) {
      ASSERT_EQ(pg.degree(v), 1u);
      EXPECT_EQ(g.element_order(pg.vertices[pg.neighbor_lists[v][0]]), 3u);
    } else {
      EXPECT_EQ(pg.degree(v), 0u);
    }
    edges += pg.degree(v);
  }
  EXPECT_EQ(edges, 2u);
}

TEST(PowerGraph, TrivialGroupRejected) { EXPECT_THROW(graph_of("Z(1)"), SpecError); }

TEST(PowerGraph, MatchesArithmeticDefinitionForCyclicGroups) {
  // In Z(n), <j> = multiples of gcd(j, n), so i is a power of j iff gcd(j, n) | i.
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const auto pg = build_power_graph(realize(GroupSpec::cyclic(n)));
    for (Element i = 1; i < n; ++i)
      for (Element j = 1; j < n; ++j) {
        const bool expect = i != j && (i % nt::gcd(j, n) == 0 || j % nt::gcd(i, n) == 0);
        ASSERT_EQ(pg.adjacent(pg.vertex_of(i), pg.vertex_of(j)), expect) << n << " " << i << " " << j;
      }
  }
}

TEST(ClosedNeighborhood, Examples) {
  const auto z6 = graph_of("Z(6)");
  EXPECT_EQ(closed_neighborhood(z6, z6.vertex_of(1)), (std::vector<Vertex>{0, 1, 2, 3, 4}));
  const auto v4 = graph_of("Ab[2,2]");
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(closed_neighborhood(v4, v), std::vector<Vertex>{v});
  const auto q8 = graph_of("Q8");
  EXPECT_EQ(closed_neighborhood(q8, q8.vertex_of(1)).size(), 7u);
}

TEST(Components, Examples) {
  EXPECT_EQ(connected_components(graph_of("Ab[2,2]")).size(), 3u);
  const auto z42 = connected_components(graph_of("Z(4)^2"));
  ASSERT_EQ(z42.size(), 3u);
  for (const auto& c : z42) EXPECT_EQ(c.size(), 5u);
  EXPECT_EQ(connected_components(graph_of("Z(6)")).size(), 1u);
  // ordered by smallest vertex
  for (std::size_t i = 1; i < z42.size(); ++i) EXPECT_LT(z42[i - 1].front(), z42[i].front());
}

TEST(PowerGraphProperties, StructuralInvariants) {
  for (const auto& s : naive::corpus()) {
    const auto g = realize(parse_group_spec(s));
    const auto pg = build_power_graph(g);
    ASSERT_EQ(pg.size(), g.size() - 1) << s;
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < pg.size(); ++v) {
      EXPECT_FALSE(pg.adjacent(v, v));
      EXPECT_EQ(pg.degree(v) + 1, closed_neighborhood(pg, v).size());
      degree_sum += pg.degree(v);
      for (Vertex u = 0; u < pg.size(); ++u) {
        ASSERT_EQ(pg.adjacent(v, u), pg.adjacent(u, v));
        // definition: one is a power of the other
        const auto cu = cyclic_subgroup(g, pg.vertices[u]);
        const auto cv = cyclic_subgroup(g, pg.vertices[v]);
        const bool power = std::binary_search(cu.begin(), cu.end(), pg.vertices[v]) ||
                           std::binary_search(cv.begin(), cv.end(), pg.vertices[u]);
        ASSERT_EQ(pg.adjacent(v, u), u != v && power) << s;
      }
    }
    EXPECT_EQ(degree_sum % 2, 0u);
  }
}

TEST(PowerGraphProperties, PGroupComponentsAreIntersectingCyclicSubgroups) {
  for (const char* s : {"Z(4)^2", "Z(2)^3", "Z(3)^2", "Ab[2,4]", "Q8", "Dih(4)", "Ab[2,8]", "Ab[3,9]", "Z(8)",
                        "P(Q8,Z(2))"}) {
    const auto g = realize(parse_group_spec(s));
    const auto pg = build_power_graph(g);
    const auto comps = connected_components(pg);
    std::vector<std::size_t> comp_of(pg.size());
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex v : comps[c]) comp_of[v] = c;
    for (Vertex u = 0; u < pg.size(); ++u)
      for (Vertex v = 0; v < pg.size(); ++v) {
        const auto cu = cyclic_subgroup(g, pg.vertices[u]);
        const auto cv = cyclic_subgroup(g, pg.vertices[v]);
        std::vector<Element> both;
        std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(both));
        ASSERT_EQ(comp_of[u] == comp_of[v], both.size() > 1) << s;
      }
  }
}

TEST(PowerGraphProperties, CyclicNonPrimePowerIsConnectedAndDominated) {
  for (std::uint64_t n : {6, 10, 12, 15, 18, 20, 30, 36}) {
    const auto g = realize(GroupSpec::cyclic(n));
    const auto pg = build_power_graph(g);
    EXPECT_EQ(connected_components(pg).size(), 1u);
    for (Element x : gen_set(g, 1)) EXPECT_EQ(pg.degree(pg.vertex_of(x)) + 1, pg.size()) << n;
  }
}

TEST(PowerGraph, WeightedViewHasUnitWeights) {
  const auto pg = graph_of("Q8");
  const auto wg = as_weighted_graph(pg);
  ASSERT_EQ(wg.size(), pg.size());
  for (Vertex v = 0; v < wg.size(); ++v) {
    EXPECT_EQ(wg.weight(v), 1u);
    EXPECT_EQ(wg.neighbors(v), pg.neighbor_lists[v]);
  }
}
