#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "gemcolor/errors.hpp"
#include "gemcolor/exact.hpp"
#include "gemcolor/generators.hpp"
#include "gemcolor/partition.hpp"
#include "reference.hpp"
#include "suite.hpp"

namespace gemcolor {
namespace {

void expect_matches_definitions(const Graph& g, const WBCPartition& p) {
  const auto ref = reference::partition(g, p.clique);
  for (int k = 1; k <= p.omega(); ++k) {
    EXPECT_EQ(p.single(k).to_vector(), ref.singles[k - 1]) << "I_" << k;
  }
  for (const auto& [pair, cell] : p.cells) {
    const std::pair<int, int> key{pair.i, pair.j};
    EXPECT_EQ(cell.to_vector(), ref.cells.at(key)) << "C_" << pair.key();
    EXPECT_EQ(p.cores.at(pair).to_vector(), ref.cores.at(key)) << "C'_" << pair.key();
    EXPECT_EQ(p.free.at(pair), ref.free.at(key)) << "D_" << pair.key();
  }
  EXPECT_EQ(p.cells.size(), ref.cells.size());
}

int covered(const Graph& g, const WBCPartition& p) {
  int total = p.omega();
  for (const auto& s : p.singles) total += s.size();
  for (const auto& [pair, cell] : p.cells) total += cell.size();
  EXPECT_LE(total, g.order());
  return total;
}

TEST(LexPair, Order) {
  const auto pairs = lex_pairs(4);
  ASSERT_EQ(pairs.size(), 6u);
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  EXPECT_EQ(pairs.front().key(), "1,2");
  EXPECT_EQ(pairs.back().key(), "3,4");
  EXPECT_LT((LexPair{1, 4}), (LexPair{2, 3}));
}

TEST(Partition, CoversClassMembersAndMatchesDefinitions) {
  for (const Graph& g : suite::build_corpus(3, 80)) {
    const WBCPartition p = build_partition(g);
    EXPECT_EQ(p.clique, max_clique(g).vertices());
    // Every vertex of a class member misses some clique vertex, so the
    // parts cover V(G) exactly.
    EXPECT_EQ(covered(g, p), g.order());
    expect_matches_definitions(g, p);
  }
}

TEST(Partition, MatchesDefinitionsOnArbitraryGraphs) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::random_graph(rng, 3 + i % 10, 0.5);
    expect_matches_definitions(g, build_partition(g));
  }
}

TEST(Partition, RejectsNonMaximumOrNonClique) {
  const Graph g = named_graph("kc5-2");
  const std::vector<Vertex> not_clique{0, 5};
  const std::vector<Vertex> too_small{0, 1};
  EXPECT_THROW(build_partition(g, not_clique), PreconditionError);
  EXPECT_THROW(build_partition(g, too_small), PreconditionError);
}

TEST(Partition, RespectsRelabeling) {
  std::mt19937_64 rng(61);
  for (const Graph& g : suite::build_corpus(4, 30)) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    const WBCPartition p = build_partition(g);
    std::vector<Vertex> image;
    for (Vertex v : p.clique) image.push_back(perm[v]);
    const WBCPartition q = build_partition(h, image);
    auto mapped = [&](const VertexSet& s) {
      VertexSet out(g.order());
      for (Vertex v : s) out.insert(perm[v]);
      return out;
    };
    for (int k = 1; k <= p.omega(); ++k) EXPECT_EQ(mapped(p.single(k)), q.single(k));
    for (const auto& [pair, cell] : p.cells) {
      EXPECT_EQ(mapped(cell), q.cells.at(pair));
      EXPECT_EQ(mapped(p.cores.at(pair)), q.cores.at(pair));
      EXPECT_EQ(p.free.at(pair), q.free.at(pair));
    }
  }
}

TEST(Partition, JsonShape) {
  const auto j = to_json(build_partition(named_graph("groetzsch")));
  EXPECT_TRUE(j.contains("A"));
  EXPECT_TRUE(j.contains("I"));
  EXPECT_TRUE(j.contains("C"));
  EXPECT_TRUE(j.contains("Cprime"));
  EXPECT_TRUE(j.contains("D"));
  EXPECT_EQ(j["A"].size(), 2u);
}

void expect_all_pass(const Graph& g) {
  const WBCPartition p = build_partition(g);
  for (const CheckReport& r : {check_fact1(g, p), check_lemma_gem(g, p),
                               check_lemma_class(g, p), check_claim1(g, p)}) {
    if (r.status == CheckStatus::kRefused) continue;
    EXPECT_TRUE(r.precondition_met) << r.check;
    for (const CheckEntry& e : r.entries) {
      EXPECT_TRUE(e.passed) << g.name() << " " << e.clause << " " << e.detail;
    }
  }
}

TEST(Checks, HoldOnCorpusAndWitnesses) {
  for (const Graph& g : suite::build_corpus(6, 120)) expect_all_pass(g);
  expect_all_pass(schlafli_complement());
  expect_all_pass(named_graph("kc5-2"));
  expect_all_pass(named_graph("kc5-3"));
  expect_all_pass(testing::case21_graph());
  expect_all_pass(testing::case22_graph());
}

TEST(Checks, ClassChecksRunOnOmegaThreeMembers) {
  const Graph g = schlafli_complement();
  const WBCPartition p = build_partition(g);
  const CheckReport lemma = check_lemma_class(g, p);
  EXPECT_EQ(lemma.status, CheckStatus::kRan);
  EXPECT_FALSE(lemma.entries.empty());
  EXPECT_TRUE(lemma.passed());
  EXPECT_EQ(check_claim1(g, p).status, CheckStatus::kRan);
}

TEST(Checks, RefusedBelowOmegaThree) {
  const Graph g = named_graph("groetzsch");
  const WBCPartition p = build_partition(g);
  const CheckReport r = check_lemma_class(g, p);
  EXPECT_EQ(r.status, CheckStatus::kRefused);
  EXPECT_FALSE(r.note.empty());
  EXPECT_EQ(check_claim1(g, p).status, CheckStatus::kRefused);
  EXPECT_EQ(to_json(r)["status"], "refused");
}

TEST(Checks, VacuousOnCompleteGraph) {
  const Graph g = complete_graph(4);
  const WBCPartition p = build_partition(g);
  EXPECT_TRUE(check_fact1(g, p).passed());
  EXPECT_TRUE(check_lemma_gem(g, p).passed());
  EXPECT_TRUE(check_claim1(g, p).passed());
}

TEST(Checks, OutsideTheClassReportsAreWellFormed) {
  // C7 contains P3 u P2; the fact-1 report flags the unmet precondition.
  const Graph c7 = cycle_graph(7);
  const CheckReport r = check_fact1(c7, build_partition(c7));
  EXPECT_FALSE(r.precondition_met);
  for (const CheckEntry& e : r.entries) {
    if (!e.passed) {
      EXPECT_FALSE(e.witness.empty());
    }
  }
  EXPECT_NO_THROW(to_json(r).dump());

  const Graph gem = named_graph("gem");
  const CheckReport g = check_lemma_gem(gem, build_partition(gem));
  EXPECT_FALSE(g.precondition_met);
  EXPECT_NO_THROW(to_json(g).dump());
}

TEST(Checks, FactOneFailureCarriesWitness) {
  // A = {0, 1}; vertices 2, 3, 4 miss both and induce P3 inside C_{1,2}.
  const Graph g = disjoint_union(complete_graph(2), path_graph(3));
  const WBCPartition p = build_partition(g);
  const CheckReport r = check_fact1(g, p);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.precondition_met);
  bool found = false;
  for (const CheckEntry& e : r.entries) {
    if (!e.passed && e.clause == "fact1.i") {
      found = true;
      EXPECT_EQ(e.witness.size(), 3u);
    }
  }
  EXPECT_TRUE(found);
}

}  // namespace
}  // namespace gemcolor
