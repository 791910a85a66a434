#include <gtest/gtest.h>

#include "latdet/bit_matrix.hpp"
#include "latdet/generators.hpp"
#include "latdet/oracles.hpp"

namespace latdet {
namespace {

BitMatrix from_digraph(const Digraph& d) {
  BitMatrix m(static_cast<std::size_t>(d.vertex_count));
  for (int i = 0; i < d.vertex_count; ++i) {
    for (int j = 0; j < d.vertex_count; ++j) {
      if (d.edge(i, j)) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }
  return m;
}

TEST(BitMatrix, SetAndTestAcrossWordBoundaries) {
  BitMatrix m(130);
  m.set(0, 63);
  m.set(0, 64);
  m.set(129, 129);
  EXPECT_TRUE(m.test(0, 63));
  EXPECT_TRUE(m.test(0, 64));
  EXPECT_FALSE(m.test(0, 65));
  EXPECT_TRUE(m.test(129, 129));
  EXPECT_EQ(m.row(0).size(), 3u);
}

TEST(BitMatrix, SquaringComposesPaths) {
  BitMatrix m = BitMatrix::identity(3);
  m.set(0, 1);
  m.set(1, 2);
  const BitMatrix sq = m.squared();
  EXPECT_TRUE(sq.test(0, 2));
  EXPECT_FALSE(sq.test(2, 0));
}

TEST(Closure, EmptyGraphGivesIdentity) {
  const auto r = reflexive_transitive_closure(BitMatrix(5));
  EXPECT_EQ(r.reach, BitMatrix::identity(5));
}

TEST(Closure, PathNeedsLogarithmicSquarings) {
  const std::size_t n = 33;
  BitMatrix path(n);
  for (std::size_t i = 0; i + 1 < n; ++i) path.set(i, i + 1);
  const auto r = reflexive_transitive_closure(path);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(r.reach.test(i, j), i <= j);
  }
  EXPECT_EQ(r.squarings, 5u);  // ceil(log2(32))
}

TEST(Closure, StopsEarlyAtFixpoint) {
  BitMatrix m(100);
  m.set(0, 1);
  const auto r = reflexive_transitive_closure(m);
  EXPECT_EQ(r.squarings, 1u);
}

TEST(Closure, MatchesWorklistAndFloydWarshall) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph d = random_digraph(1 + static_cast<int>(seed % 70), 0.05, seed);
    const BitMatrix adj = from_digraph(d);
    const auto squared = reflexive_transitive_closure(adj, 2);
    EXPECT_EQ(squared.reach, worklist_closure(adj));
    const auto fw = floyd_warshall_closure(d);
    for (std::size_t i = 0; i < fw.size(); ++i) {
      for (std::size_t j = 0; j < fw.size(); ++j) ASSERT_EQ(squared.reach.test(i, j), fw[i][j]);
    }
  }
}

}  // namespace
}  // namespace latdet
