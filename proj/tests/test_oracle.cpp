#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace pga;
using oracle::Perm;

namespace {

WeightedGraph complete(std::size_t n) {
  WeightedGraph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

WeightedGraph power_graph_of(const std::string& spec) {
  return as_weighted_graph(build_power_graph(realize(parse_group_spec(spec))));
}

QuotientGraph quotient_of(const std::string& spec) {
  const auto pg = build_power_graph(realize(parse_group_spec(spec)));
  return build_quotient(pg, men_partition(pg));
}

bool naive_isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.size() != b.size()) return false;
  std::vector<Vertex> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Vertex x = 0; x < a.size() && ok; ++x) {
      if (a.weight(x) != b.weight(p[x])) ok = false;
      for (Vertex y = x + 1; y < a.size() && ok; ++y)
        if (a.adjacent(x, y) != b.adjacent(p[x], p[y])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST(CountAutomorphisms, Examples) {
  EXPECT_EQ(*oracle::count_automorphisms(complete(3)).count, 6);
  EXPECT_EQ(*oracle::count_automorphisms(WeightedGraph(7)).count, 5040);
  // 3! * 2^3 * (2!)^6
  EXPECT_EQ(*oracle::count_automorphisms(power_graph_of("Z(4)^2")).count, 3072);
  EXPECT_EQ(*oracle::count_automorphisms(WeightedGraph(1)).count, 1);
  EXPECT_EQ(*oracle::count_automorphisms(WeightedGraph(0)).count, 1);
}

TEST(CountAutomorphisms, LargeCountsNeedNoEnumeration) {
  // S20 on the empty graph, far beyond max_count
  EXPECT_EQ(*oracle::count_automorphisms(WeightedGraph(20)).count, factorial(20));
  EXPECT_EQ(*oracle::count_automorphisms(complete(30)).count, factorial(30));
}

TEST(CountAutomorphisms, CapsGiveUnknownNotWrongNumbers) {
  auto r = oracle::count_automorphisms(WeightedGraph(41));
  EXPECT_FALSE(r.known());
  EXPECT_NE(r.reason.find("41 nodes"), std::string::npos);
  oracle::Caps tiny;
  tiny.max_search_nodes = 3;
  r = oracle::count_automorphisms(power_graph_of("Z(4)^2"), tiny);
  EXPECT_FALSE(r.known());
}

TEST(EnumerateAutomorphisms, Examples) {
  const auto one = oracle::enumerate_automorphisms(WeightedGraph(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Perm{0});

  WeightedGraph k2(std::vector<std::uint64_t>{1, 2});
  k2.add_edge(0, 1);
  const auto k2maps = oracle::enumerate_automorphisms(k2);
  ASSERT_EQ(k2maps.size(), 1u);
  EXPECT_EQ(k2maps[0], (Perm{0, 1}));

  const auto s3 = oracle::enumerate_automorphisms(power_graph_of("Sym(3)"));
  EXPECT_EQ(s3.size(), 12u);
  EXPECT_EQ(s3.front(), (Perm{0, 1, 2, 3, 4}));
}

TEST(EnumerateAutomorphisms, CapThrows) {
  oracle::Caps caps;
  caps.max_count = 100;
  EXPECT_THROW(oracle::enumerate_automorphisms(WeightedGraph(6), caps), CapExceeded);
}

TEST(AreIsomorphic, Examples) {
  WeightedGraph a(std::vector<std::uint64_t>{2, 2}), b(std::vector<std::uint64_t>{2, 2});
  a.add_edge(0, 1);
  b.add_edge(1, 0);
  const auto r = oracle::are_isomorphic(a, b);
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(r.witness.size(), 2u);

  WeightedGraph k2(2), e2(2);
  k2.add_edge(0, 1);
  EXPECT_FALSE(oracle::are_isomorphic(k2, e2).isomorphic);

  WeightedGraph w1(std::vector<std::uint64_t>{1, 2}), w2(std::vector<std::uint64_t>{1, 3});
  EXPECT_FALSE(oracle::are_isomorphic(w1, w2).isomorphic);
}

TEST(AreIsomorphic, ComponentsOfHomocyclicQuotient) {
  const auto q = quotient_of("Z(4)^2");
  const auto comps = connected_components(q.graph);
  ASSERT_EQ(comps.size(), 3u);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) {
      const auto a = q.graph.induced(comps[i]);
      const auto b = q.graph.induced(comps[j]);
      const auto r = oracle::are_isomorphic(a, b);
      ASSERT_TRUE(r.isomorphic);
      // witness maps a onto b: check edges directly
      for (Vertex x = 0; x < a.size(); ++x)
        for (Vertex y = 0; y < a.size(); ++y)
          if (x != y) {
            EXPECT_EQ(a.adjacent(x, y), b.adjacent(r.witness[x], r.witness[y]));
          }
    }
}

TEST(VertexOrbits, Examples) {
  EXPECT_EQ(oracle::vertex_orbits(WeightedGraph(4)).size(), 1u);
  WeightedGraph k2(std::vector<std::uint64_t>{1, 2});
  k2.add_edge(0, 1);
  EXPECT_EQ(oracle::vertex_orbits(k2), (std::vector<std::vector<Vertex>>{{0}, {1}}));

  const auto q = quotient_of("Z(4)^2");
  const auto orbits = oracle::vertex_orbits(q.graph);
  ASSERT_EQ(orbits.size(), 2u);
  std::multiset<std::pair<std::size_t, std::uint64_t>> shape;
  for (const auto& o : orbits) {
    for (Vertex v : o) EXPECT_EQ(q.graph.weight(v), q.graph.weight(o.front()));
    shape.insert({o.size(), q.graph.weight(o.front())});
  }
  EXPECT_EQ(shape, (std::multiset<std::pair<std::size_t, std::uint64_t>>{{3, 1}, {6, 2}}));
}

TEST(OracleProperties, RandomGraphsAgreeWithNaivePermutationSearch) {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + rng() % 7;
    const double density = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto g = naive::random_graph(rng, n, density, 1 + rng() % 3);
    const auto count = oracle::count_automorphisms(g);
    ASSERT_TRUE(count.known());
    const auto expected = naive::naive_count(g);
    ASSERT_EQ(*count.count, expected) << "iteration " << iter;
    const auto all = oracle::enumerate_automorphisms(g);
    ASSERT_EQ(all.size(), expected);
    std::set<Perm> distinct(all.begin(), all.end());
    EXPECT_EQ(distinct.size(), all.size());
    for (const auto& p : all) ASSERT_TRUE(oracle::is_automorphism(g, p));
    EXPECT_EQ(oracle::vertex_orbits(g), naive::naive_orbits(g));
  }
}

TEST(OracleProperties, RelabellingInvariance) {
  std::mt19937 rng(11);
  std::vector<WeightedGraph> graphs;
  for (const auto& s : naive::corpus()) {
    auto pg = power_graph_of(s);
    if (pg.size() <= 40) graphs.push_back(std::move(pg));
    graphs.push_back(quotient_of(s).graph);
  }
  for (int i = 0; i < 40; ++i) graphs.push_back(naive::random_graph(rng, 6 + rng() % 10, 0.3, 2));
  for (const auto& g : graphs) {
    const auto base = oracle::count_automorphisms(g);
    ASSERT_TRUE(base.known());
    for (int k = 0; k < 3; ++k) {
      const auto perm = naive::random_perm(rng, g.size());
      const auto h = g.relabelled(perm);
      EXPECT_EQ(*oracle::count_automorphisms(h).count, *base.count);
      const auto iso = oracle::are_isomorphic(g, h);
      ASSERT_TRUE(iso.isomorphic);
      EXPECT_EQ(iso.witness.size(), g.size());
    }
  }
}

TEST(OracleProperties, IsomorphismAgreesWithNaiveSearch) {
  std::mt19937 rng(5);
  int positives = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    const auto a = naive::random_graph(rng, n, 0.5, 2);
    const auto b = (iter % 2 == 0) ? a.relabelled(naive::random_perm(rng, n)) : naive::random_graph(rng, n, 0.5, 2);
    const bool expect = naive_isomorphic(a, b);
    positives += expect;
    ASSERT_EQ(oracle::are_isomorphic(a, b).isomorphic, expect) << "iteration " << iter;
  }
  EXPECT_GT(positives, 200);
}

TEST(OracleProperties, RefinementSoundness) {
  std::mt19937 rng(3);
  std::vector<WeightedGraph> graphs;
  for (const char* s : {"Sym(3)", "Q8", "Z(6)", "Ab[2,4]", "Z(2)^3", "Dih(4)", "Z(12)"})
    graphs.push_back(power_graph_of(s));
  for (int i = 0; i < 50; ++i) graphs.push_back(naive::random_graph(rng, 2 + rng() % 7, 0.4, 2));
  for (const auto& g : graphs) {
    const auto colors = oracle::stable_coloring(g);
    for (const auto& p : oracle::enumerate_automorphisms(g))
      for (Vertex v = 0; v < g.size(); ++v) ASSERT_EQ(colors[v], colors[p[v]]);
  }
}
