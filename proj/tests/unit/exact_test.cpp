#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gemcolor/errors.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/matching.hpp"
#include "reference.hpp"
#include "suite.hpp"

namespace gemcolor {
namespace {

bool proper_with(const Graph& g, const Coloring& c, int k) {
  return reference::is_proper(g, c.colors()) && c.num_colors() == k;
}

TEST(MaxClique, Examples) {
  const auto k4 = max_clique(complete_graph(4));
  EXPECT_EQ(k4.omega, 4);
  EXPECT_EQ(k4.vertices(), (std::vector<Vertex>{0, 1, 2, 3}));
  const auto c5 = max_clique(cycle_graph(5));
  EXPECT_EQ(c5.omega, 2);
  EXPECT_EQ(c5.vertices(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(max_clique(schlafli_complement()).omega, 3);
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(max_clique(named_graph("kc5-" + std::to_string(m))).omega, 2 * m);
  }
  EXPECT_THROW(max_clique(empty_graph(0)), PreconditionError);
  EXPECT_EQ(max_clique(cycle_graph(5), VertexSet(5)).omega, 0);
}

TEST(MaxClique, AgreesWithEnumerationAndIsMaximal) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng, 1 + i % 14, 0.15 + 0.07 * (i % 11));
    const auto r = max_clique(g);
    ASSERT_EQ(r.omega, reference::clique_number(g));
    ASSERT_TRUE(is_clique(g, r.witness));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (r.witness.contains(v)) continue;
      VertexSet bigger = r.witness;
      bigger.insert(v);
      EXPECT_FALSE(is_clique(g, bigger));
    }
    EXPECT_EQ(independence_number(g), reference::independence_number(g));
  }
}

TEST(Independence, Examples) {
  EXPECT_EQ(independence_number(named_graph("kc5-2")), 2);
  EXPECT_EQ(independence_number(empty_graph(6)), 6);
  EXPECT_EQ(independence_number(cycle_graph(5)), 2);
  EXPECT_EQ(independence_number(schlafli_complement()), 6);
}

TEST(Chromatic, KnownWitnesses) {
  EXPECT_EQ(chromatic_number(named_graph("groetzsch")).chi, 4);
  EXPECT_EQ(chromatic_number(schlafli_complement()).chi, 6);
  EXPECT_EQ(chromatic_number(named_graph("kc5-2")).chi, 5);
  EXPECT_EQ(chromatic_number(complete_graph(5)).chi, 5);
}

TEST(Chromatic, WitnessIsOptimalAndNormalized) {
  const auto r = chromatic_number(schlafli_complement());
  EXPECT_TRUE(proper_with(schlafli_complement(), r.witness, 6));
  EXPECT_EQ(r.witness, r.witness.normalized());
  EXPECT_FALSE(is_k_colorable(schlafli_complement(), 5));
}

TEST(Chromatic, AgreesWithEnumeration) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_graph(rng, 1 + i % 8, 0.1 + 0.1 * (i % 9));
    const auto r = chromatic_number(g);
    ASSERT_EQ(r.chi, reference::chromatic_number(g)) << "graph " << i;
    EXPECT_TRUE(proper_with(g, r.witness, r.chi));
    EXPECT_LE(max_clique(g).omega, r.chi);
    EXPECT_LE(r.chi, g.order());
  }
}

TEST(Chromatic, SubgraphMonotone) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testing::random_graph(rng, 12, 0.45);
    VertexSet s(12);
    for (Vertex v = 0; v < 12; ++v) {
      if (rng() % 3) s.insert(v);
    }
    EXPECT_LE(chromatic_number(induced_subgraph(g, s).graph).chi, chromatic_number(g).chi);
  }
}

TEST(Chromatic, MycielskianRaisesChiByOne) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 25; ++i) {
    const Graph g = testing::random_graph(rng, 2 + i % 7, 0.5);
    EXPECT_EQ(chromatic_number(mycielskian(g)).chi, chromatic_number(g).chi + 1);
  }
}

TEST(Chromatic, GuardrailAndEdgeCases) {
  EXPECT_THROW(chromatic_number(empty_graph(70)), SizeGuardrail);
  EXPECT_THROW(chromatic_number(cycle_graph(10), 9), SizeGuardrail);
  EXPECT_EQ(chromatic_number(empty_graph(70), 70).chi, 1);
  EXPECT_EQ(chromatic_number(empty_graph(0)).chi, 0);
  Coloring c;
  EXPECT_TRUE(is_k_colorable(cycle_graph(7), 3, &c));
  EXPECT_TRUE(reference::is_proper(cycle_graph(7), c.colors()));
  EXPECT_FALSE(is_k_colorable(cycle_graph(7), 2));
}

TEST(Alpha2Shortcut, Examples) {
  EXPECT_EQ(chi_alpha2_shortcut(cycle_graph(5)), 3);
  EXPECT_EQ(chi_alpha2_shortcut(named_graph("kc5-3")), 8);
  EXPECT_EQ(chi_alpha2_shortcut(complete_graph(6)), 6);
  EXPECT_THROW(chi_alpha2_shortcut(empty_graph(3)), PreconditionError);
}

TEST(Alpha2Shortcut, AgreesWithExactChi) {
  std::mt19937_64 rng(47);
  int tested = 0;
  for (int i = 0; i < 400 && tested < 60; ++i) {
    const Graph g = complement(testing::random_graph(rng, 4 + i % 9, 0.25));
    if (reference::independence_number(g) > 2) continue;
    ++tested;
    EXPECT_EQ(chi_alpha2_shortcut(g), chromatic_number(g).chi);
  }
  EXPECT_GE(tested, 30);
}

TEST(Matching, AgreesWithEdgeRecursion) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    const Graph g = testing::random_graph(rng, 2 + i % 9, 0.3);
    const auto mate = maximum_matching(g);
    ASSERT_EQ(matching_size(mate), reference::matching_number(g));
    for (Vertex v = 0; v < g.order(); ++v) {
      if (mate[v] >= 0) {
        EXPECT_TRUE(g.adjacent(v, mate[v]));
        EXPECT_EQ(mate[mate[v]], v);
      }
    }
  }
  // Odd cycles force blossom contraction.
  EXPECT_EQ(matching_size(maximum_matching(cycle_graph(9))), 4);
  EXPECT_EQ(matching_size(maximum_matching(named_graph("groetzsch"))), 5);
}

TEST(Chromatic, CorpusBoundsHold) {
  for (const Graph& g : suite::build_corpus(2, 60)) {
    const int chi = chromatic_number(g).chi;
    EXPECT_LE(max_clique(g).omega, chi);
  }
}

}  // namespace
}  // namespace gemcolor
