#include <gtest/gtest.h>

#include "gemcolor/errors.hpp"
#include "gemcolor/vertex_set.hpp"

namespace gemcolor {
namespace {

TEST(VertexSet, BasicMembership) {
  VertexSet s(10, {1, 4, 9});
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.first(), 1);
  EXPECT_EQ(s.next(1), 4);
  EXPECT_EQ(s.last(), 9);
  EXPECT_EQ(s.next(9), -1);
  s.erase(4);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{1, 9}));
}

TEST(VertexSet, OutOfRangeIsMalformed) {
  VertexSet s(5);
  EXPECT_THROW(s.insert(5), MalformedInput);
  EXPECT_THROW(s.insert(-1), MalformedInput);
  EXPECT_THROW(VertexSet(VertexSet::kMaxVertices + 1), MalformedInput);
}

TEST(VertexSet, AlgebraAcrossWordBoundaries) {
  const int n = 200;
  VertexSet a = VertexSet::range(n, 60, 130);
  VertexSet b = VertexSet::range(n, 100, 200);
  EXPECT_EQ((a & b).size(), 30);
  EXPECT_EQ((a | b).size(), 140);
  EXPECT_EQ((a - b).size(), 40);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.complement().size(), n - 70);
  EXPECT_EQ(a.complement().complement(), a);
  int count = 0;
  for (Vertex v : b) {
    EXPECT_GE(v, 100);
    ++count;
  }
  EXPECT_EQ(count, 100);
}

TEST(VertexSet, FullAndEmpty) {
  EXPECT_EQ(VertexSet::full(512).size(), 512);
  EXPECT_TRUE(VertexSet(0).empty());
  EXPECT_EQ(VertexSet(7).first(), -1);
}

}  // namespace
}  // namespace gemcolor
