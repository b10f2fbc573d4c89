#include <gtest/gtest.h>

#include "gemcolor/errors.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/io.hpp"
#include "gemcolor/patterns.hpp"
#include "suite.hpp"

namespace gemcolor {
namespace {

TEST(NamedGraph, Counts) {
  const Graph gem = named_graph("gem");
  EXPECT_EQ(gem.order(), 5);
  EXPECT_EQ(gem.edge_count(), 7u);
  EXPECT_TRUE(are_isomorphic(gem, join(complete_graph(1), path_graph(4))));
  const Graph g = named_graph("groetzsch");
  EXPECT_EQ(g.order(), 11);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_EQ(g, mycielskian(cycle_graph(5)));
  const Graph s = named_graph("schlafli-complement");
  EXPECT_EQ(s.order(), 27);
  EXPECT_EQ(s.edge_count(), 135u);
  EXPECT_EQ(named_graph("C7"), cycle_graph(7));
  EXPECT_EQ(named_graph("k4"), complete_graph(4));
  EXPECT_EQ(named_graph("e3"), empty_graph(3));
  EXPECT_EQ(named_graph("p5"), path_graph(5));
  EXPECT_THROW(named_graph("nope"), UnknownName);
  EXPECT_THROW(named_graph("c2"), UnknownName);
  for (const std::string& name : named_graph_examples()) EXPECT_NO_THROW(named_graph(name));
}

TEST(Mycielskian, Structure) {
  EXPECT_TRUE(are_isomorphic(mycielskian(complete_graph(2)), cycle_graph(5)));
  const Graph g = mycielskian(cycle_graph(5));
  EXPECT_EQ(max_clique(g).omega, 2);
  EXPECT_EQ(chromatic_number(g).chi, 4);
  // Shadow of 0 is 5; it sees the neighbours 1 and 4 of vertex 0 and the apex.
  EXPECT_EQ(g.neighbors(5).to_vector(), (std::vector<Vertex>{1, 4, 10}));
}

TEST(CompleteExpansion, Examples) {
  EXPECT_EQ(complete_expansion({cycle_graph(5), {1, 1, 1, 1, 1}}).graph, cycle_graph(5));
  const Expansion k = complete_expansion({cycle_graph(5), {2, 2, 2, 2, 2}});
  EXPECT_EQ(k.graph.order(), 10);
  EXPECT_EQ(k.graph.edge_count(), 25u);
  EXPECT_EQ(max_clique(k.graph).omega, 4);
  EXPECT_EQ(independence_number(k.graph), 2);
  EXPECT_EQ(k.bags[1].to_vector(), (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(complete_expansion({complete_graph(2), {2, 3}}).graph, complete_graph(5));
  EXPECT_THROW(complete_expansion({cycle_graph(5), {1, 1}}), PreconditionError);
  EXPECT_THROW(complete_expansion({cycle_graph(3), {1, 0, 1}}), PreconditionError);
}

TEST(CompleteExpansion, LowerBoundFamily) {
  for (int m = 1; m <= 3; ++m) {
    const Graph g = named_graph("kc5-" + std::to_string(m));
    EXPECT_TRUE(is_class_member(g).member);
    EXPECT_EQ(max_clique(g).omega, 2 * m);
    EXPECT_EQ(chi_alpha2_shortcut(g), (10 * m + 3) / 4);
  }
}

TEST(CompleteExpansion, Sidecar) {
  const ExpansionSpec spec{cycle_graph(5), {1, 2, 1, 2, 1}};
  const auto j = expansion_sidecar(spec, complete_expansion(spec));
  EXPECT_EQ(j["sizes"], nlohmann::json({1, 2, 1, 2, 1}));
  EXPECT_EQ(j["bags"][1], nlohmann::json({1, 2}));
  EXPECT_EQ(io::graph_from_json(j["base"]), cycle_graph(5));
}

TEST(Schlafli, ParametersAndInvariants) {
  const Graph g = schlafli_complement();
  const auto p = srg_parameters(g);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (SrgParameters{27, 10, 1, 5}));
  EXPECT_EQ(max_clique(g).omega, 3);
  EXPECT_EQ(independence_number(g), 6);
  EXPECT_TRUE(is_class_member(g).member);
  // The Schlafli graph itself is SRG(27, 16, 10, 8).
  EXPECT_EQ(*srg_parameters(complement(g)), (SrgParameters{27, 16, 10, 8}));
  EXPECT_FALSE(srg_parameters(path_graph(4)).has_value());
  EXPECT_FALSE(srg_parameters(complete_graph(4)).has_value());
}

TEST(RandomMember, DeterministicPerSeed) {
  for (auto s : {SampleStrategy::kReject, SampleStrategy::kExpand, SampleStrategy::kPrune}) {
    const Graph a = random_class_member(8, 42, s);
    const Graph b = random_class_member(8, 42, s);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.order(), 8);
    EXPECT_TRUE(is_class_member(a).member);
  }
}

TEST(RandomMember, GuardrailsAndNames) {
  EXPECT_THROW(random_class_member(17, 1, SampleStrategy::kReject), PreconditionError);
  EXPECT_THROW(random_class_member(0, 1, SampleStrategy::kExpand), PreconditionError);
  EXPECT_THROW(random_class_member(28, 1, SampleStrategy::kPrune), PreconditionError);
  EXPECT_EQ(parse_strategy("Prune"), SampleStrategy::kPrune);
  EXPECT_EQ(strategy_name(SampleStrategy::kReject), "reject");
  EXPECT_THROW(parse_strategy("grow"), UnknownName);
}

TEST(RandomMember, CorpusIsAllMembers) {
  const auto corpus = suite::build_corpus(1, 200);
  ASSERT_EQ(corpus.size(), 200u);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(corpus[i].order(), 5 + static_cast<int>(i % 10));
    EXPECT_TRUE(is_class_member(corpus[i]).member);
  }
  const auto again = suite::build_corpus(1, 200);
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(corpus[i], again[i]);
}

}  // namespace
}  // namespace gemcolor
