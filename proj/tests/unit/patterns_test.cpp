#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gemcolor/errors.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/patterns.hpp"
#include "reference.hpp"
#include "suite.hpp"

namespace gemcolor {
namespace {

TEST(Patterns, NamedPatternShapes) {
  struct Expect {
    const char* name;
    int n;
    std::size_t m;
  };
  for (const Expect& e : {Expect{"p2", 2, 1}, Expect{"p3", 3, 2}, Expect{"p4", 4, 3},
                          Expect{"2k2", 4, 2}, Expect{"p3up2", 5, 3}, Expect{"c4", 4, 4},
                          Expect{"c5", 5, 5}, Expect{"gem", 5, 7}, Expect{"diamond", 4, 5},
                          Expect{"hvn", 5, 8}, Expect{"k1+c4", 5, 8},
                          Expect{"co-p3up2", 5, 7}, Expect{"k5-e", 5, 9},
                          Expect{"k5", 5, 10}}) {
    const Pattern p = named_pattern(e.name);
    EXPECT_EQ(p.graph.order(), e.n) << e.name;
    EXPECT_EQ(p.graph.edge_count(), e.m) << e.name;
  }
  EXPECT_EQ(named_pattern("GEM").graph, named_pattern("gem").graph);
  EXPECT_THROW(named_pattern("k9"), UnknownName);
  EXPECT_TRUE(are_isomorphic(named_pattern("co-p3up2").graph,
                             complement(named_pattern("p3up2").graph)));
  EXPECT_TRUE(are_isomorphic(named_pattern("p3up2").graph, reference::p3_plus_p2()));
  EXPECT_TRUE(are_isomorphic(named_pattern("gem").graph, reference::gem()));
}

TEST(Patterns, CustomPatternSizeLimit) {
  EXPECT_NO_THROW(custom_pattern(cycle_graph(8), "c8"));
  EXPECT_THROW(custom_pattern(cycle_graph(9), "c9"), UnsupportedPattern);
  EXPECT_THROW(find_induced(cycle_graph(12), Pattern{"c9", cycle_graph(9)}),
               UnsupportedPattern);
}

TEST(Patterns, FindInducedExamples) {
  const Pattern gem = named_pattern("gem");
  const auto self = find_induced(gem.graph, gem);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->embedding.size(), 5u);
  EXPECT_TRUE(witness_is_valid(gem.graph, gem, *self));

  EXPECT_FALSE(find_induced(named_graph("groetzsch"), named_pattern("diamond")));
  EXPECT_FALSE(find_induced(named_graph("kc5-2"), gem));
  EXPECT_FALSE(find_induced(cycle_graph(5), named_pattern("p3up2")));
  EXPECT_FALSE(find_induced(schlafli_complement(), named_pattern("diamond")));
}

TEST(Patterns, FindInducedWithin) {
  const Graph g = disjoint_union(path_graph(4), complete_graph(3));
  const Pattern p4 = named_pattern("p4");
  EXPECT_TRUE(find_induced(g, p4, VertexSet(7, {0, 1, 2, 3})).has_value());
  EXPECT_FALSE(find_induced(g, p4, VertexSet(7, {1, 2, 3, 4, 5, 6})).has_value());
}

TEST(Patterns, MembershipExamples) {
  EXPECT_TRUE(is_class_member(named_graph("groetzsch")).member);
  EXPECT_TRUE(is_class_member(schlafli_complement()).member);
  const Membership gem = is_class_member(named_pattern("gem").graph);
  EXPECT_FALSE(gem.member);
  ASSERT_TRUE(gem.witness.has_value());
  EXPECT_EQ(gem.witness->pattern, "gem");
  EXPECT_EQ(gem.witness->embedding.size(), 5u);
  // Every P3 in C6 dominates all but one vertex, so C6 is a member; C7 is not.
  EXPECT_TRUE(is_class_member(cycle_graph(6)).member);
  EXPECT_TRUE(reference::is_class_member(cycle_graph(6)));
  EXPECT_FALSE(is_class_member(cycle_graph(7)).member);
}

TEST(Patterns, ParsePatternList) {
  const auto list = parse_pattern_list("p3up2, GEM");
  ASSERT_EQ(list.size(), 2u);
  EXPECT_EQ(list[0].name, "p3up2");
  EXPECT_EQ(list[1].name, "gem");
  EXPECT_THROW(parse_pattern_list("p3up2,bogus"), UnknownName);
}

TEST(Patterns, P3AndP4FreeFastPaths) {
  EXPECT_TRUE(is_p3_free(disjoint_union(complete_graph(3), complete_graph(5))));
  EXPECT_FALSE(is_p4_free(path_graph(4)));
  EXPECT_FALSE(is_p3_free(cycle_graph(4)));
  EXPECT_TRUE(is_p4_free(cycle_graph(4)));
}

TEST(Patterns, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(23);
  const auto patterns = parse_pattern_list("p3,p4,2k2,p3up2,gem,diamond,c4,c5,hvn,k1+c4");
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_graph(rng, 3 + i % 7, 0.2 + 0.1 * (i % 7));
    for (const Pattern& p : patterns) {
      const auto found = find_induced(g, p);
      ASSERT_EQ(found.has_value(), reference::contains_induced(g, p.graph))
          << p.name << " on graph " << i;
      if (found) {
        EXPECT_TRUE(witness_is_valid(g, p, *found));
        const Graph image =
            induced_subgraph(g, std::span<const Vertex>(found->embedding)).graph;
        EXPECT_EQ(image, p.graph);
      }
    }
    EXPECT_EQ(is_p3_free(g), !reference::contains_induced(g, path_graph(3)));
    EXPECT_EQ(is_p4_free(g), !reference::contains_induced(g, path_graph(4)));
    EXPECT_EQ(is_class_member(g).member, reference::is_class_member(g));
  }
}

TEST(Patterns, MembershipIsHereditary) {
  std::mt19937_64 rng(29);
  for (const Graph& g : suite::build_corpus(5, 40)) {
    ASSERT_TRUE(is_class_member(g).member);
    for (int k = 0; k < 5; ++k) {
      VertexSet s(g.order());
      for (Vertex v = 0; v < g.order(); ++v) {
        if (rng() % 2) s.insert(v);
      }
      EXPECT_TRUE(is_class_member(induced_subgraph(g, s).graph).member);
    }
  }
}

TEST(Patterns, Isomorphism) {
  EXPECT_TRUE(are_isomorphic(mycielskian(complete_graph(2)), cycle_graph(5)));
  EXPECT_FALSE(are_isomorphic(path_graph(4), named_pattern("2k2").graph));
  const std::vector<Vertex> perm{2, 4, 0, 1, 3};
  const Graph gem = named_pattern("gem").graph;
  const auto iso = find_isomorphism(gem, relabel(gem, perm));
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(relabel(gem, *iso), relabel(gem, perm));
}

}  // namespace
}  // namespace gemcolor
