#include <gtest/gtest.h>

#include "latdet/error.hpp"
#include "latdet/generators.hpp"
#include "latdet/lattice.hpp"

namespace latdet {
namespace {

TEST(GlobalState, LevelIsTheSumOfCounts) {
  EXPECT_EQ(GlobalState({1, 2, 0}).level(), 3);
  EXPECT_EQ(GlobalState::zeros(4).level(), 0);
}

TEST(GlobalState, MeetAndJoinAreComponentwise) {
  const GlobalState a{1, 3, 0};
  const GlobalState b{2, 1, 0};
  EXPECT_EQ(meet(a, b), GlobalState({1, 1, 0}));
  EXPECT_EQ(join(a, b), GlobalState({2, 3, 0}));
  EXPECT_THROW(meet(a, GlobalState{1}), InvalidInput);
}

TEST(GlobalState, ComponentwiseOrder) {
  EXPECT_TRUE(GlobalState({0, 1}).precedes_or_equals(GlobalState({1, 1})));
  EXPECT_FALSE(GlobalState({2, 0}).precedes_or_equals(GlobalState({1, 1})));
  EXPECT_EQ(GlobalState({1, 2}).to_string(), "[1,2]");
}

TEST(ChainPoset, RejectsInvalidShapes) {
  EXPECT_THROW(ChainPoset(std::vector<int>{}), InvalidInput);
  EXPECT_THROW(ChainPoset({-1}), InvalidInput);
  EXPECT_THROW(ChainPoset({1}, {{{0, 1}, {1, 1}}}), InvalidInput);
  EXPECT_THROW(ChainPoset({1, 1}, {{{0, 2}, {1, 1}}}), InvalidInput);
}

TEST(ChainPoset, RejectsCausalCycles) {
  EXPECT_THROW(ChainPoset({1, 1}, {{{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}}), InvalidInput);
  // A cycle through intra-chain order: (0,2) -> (1,1) -> (0,1) -> (0,2).
  EXPECT_THROW(ChainPoset({2, 1}, {{{0, 2}, {1, 1}}, {{1, 1}, {0, 1}}}), InvalidInput);
}

TEST(ChainPoset, BottomTopAndSizes) {
  const ChainPoset p({2, 0, 3});
  EXPECT_EQ(p.bottom(), GlobalState({0, 0, 0}));
  EXPECT_EQ(p.top(), GlobalState({2, 0, 3}));
  EXPECT_EQ(p.top_level(), 5);
  EXPECT_EQ(p.product_size(), 12u);
  EXPECT_TRUE(p.is_product());
  EXPECT_THROW(p.clock(0, 1), InvalidInput);
}

TEST(ChainPoset, ProductSizeSaturates) {
  const ChainPoset p(std::vector<int>(80, 1000));
  EXPECT_EQ(p.product_size(), std::numeric_limits<std::uint64_t>::max());
}

TEST(ChainPoset, ClocksAreLeastIdeals) {
  // (0,1) -> (1,1), (1,2) -> (2,1): the clock of (2,1) pulls in both.
  const ChainPoset p({2, 2, 1}, {{{0, 1}, {1, 1}}, {{1, 2}, {2, 1}}});
  const auto c = p.clock(2, 1);
  EXPECT_EQ(std::vector<int>(c.begin(), c.end()), (std::vector<int>{1, 2, 1}));
  const auto d = p.clock(0, 2);
  EXPECT_EQ(std::vector<int>(d.begin(), d.end()), (std::vector<int>{2, 0, 0}));
}

TEST(IsIdeal, ProductLatticeAcceptsEveryVector) {
  const ChainPoset p({2, 2});
  for (const auto& g : {GlobalState{0, 0}, GlobalState{2, 1}, GlobalState{0, 2}}) {
    EXPECT_TRUE(is_ideal(p, g));
  }
}

TEST(IsIdeal, SingleEdge) {
  const ChainPoset p({1, 1}, {{{0, 1}, {1, 1}}});
  EXPECT_FALSE(is_ideal(p, GlobalState{0, 1}));
  EXPECT_TRUE(is_ideal(p, GlobalState{1, 1}));
}

TEST(IsIdeal, DimensionMismatchIsInvalid) {
  const ChainPoset p({1, 1});
  EXPECT_THROW(is_ideal(p, GlobalState{0}), InvalidInput);
  EXPECT_THROW(is_ideal(p, GlobalState{0, 2}), InvalidInput);
}

TEST(IsIdeal, AgreesWithDirectEdgeScan) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::vector<int> heights(4);
    for (auto& h : heights) h = static_cast<int>(rng.uniform(0, 3));
    std::vector<CausalEdge> edges;
    // Edges only from lower to higher chain index keep the order acyclic.
    for (int k = 0; k < 4; ++k) {
      const auto a = static_cast<std::size_t>(rng.uniform(0, 2));
      const auto b = static_cast<std::size_t>(rng.uniform(a + 1, 3));
      if (heights[a] == 0 || heights[b] == 0) continue;
      edges.push_back({{a, static_cast<int>(rng.uniform(1, heights[a]))},
                       {b, static_cast<int>(rng.uniform(1, heights[b]))}});
    }
    const ChainPoset p(heights, edges);
    GlobalState g = p.bottom();
    // Scan every vector of the product and compare with the definition.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == heights.size()) {
        bool direct = true;
        // Close the edges transitively by iterating to a fixpoint.
        GlobalState need = g;
        bool changed = true;
        while (changed) {
          changed = false;
          for (const auto& e : edges) {
            if (need[e.after.chain] >= e.after.index && need[e.before.chain] < e.before.index) {
              need[e.before.chain] = e.before.index;
              changed = true;
            }
          }
        }
        direct = need == g;
        EXPECT_EQ(is_ideal(p, g), direct) << g.to_string();
        return;
      }
      for (int v = 0; v <= heights[i]; ++v) {
        g[i] = v;
        rec(i + 1);
      }
      g[i] = 0;
    };
    rec(0);
  }
}

TEST(Advance, IncrementsOneComponent) {
  const ChainPoset p({3, 3, 3});
  EXPECT_EQ(advance(p, p.bottom(), 0), GlobalState({1, 0, 0}));
  EXPECT_EQ(advance(p, GlobalState{1, 2, 0}, 2), GlobalState({1, 2, 1}));
  EXPECT_THROW(advance(p, p.top(), 1), AtTop);
  EXPECT_THROW(advance(p, p.bottom(), 3), InvalidInput);
}

TEST(Enumerate, BooleanLatticeHasAllSubsets) {
  EXPECT_EQ(enumerate_ideals(ChainPoset::boolean(3)).size(), 8u);
}

TEST(Enumerate, EdgeExcludesOneState) {
  const auto ideals = enumerate_ideals(ChainPoset({1, 1}, {{{0, 1}, {1, 1}}}));
  EXPECT_EQ(ideals, (std::vector<GlobalState>{{0, 0}, {1, 0}, {1, 1}}));
}

TEST(Enumerate, LexicographicOrder) {
  const auto ideals = enumerate_ideals(ChainPoset({1, 2}));
  EXPECT_TRUE(std::is_sorted(ideals.begin(), ideals.end()));
  EXPECT_EQ(ideals.size(), 6u);
}

TEST(Enumerate, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_ideals(ChainPoset::boolean(10), 1000), OracleTooLarge);
  EXPECT_NO_THROW(enumerate_ideals(ChainPoset::boolean(10), 1024));
}

TEST(Enumerate, VisitorCanStopEarly) {
  int seen = 0;
  for_each_ideal(ChainPoset::boolean(4), [&](const GlobalState&) { return ++seen < 3; });
  EXPECT_EQ(seen, 3);
}

TEST(Enumerate, IdealsAreClosedUnderMeetAndJoin) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Computation c = random_computation(3, 3, 0.5, 1.0, seed);
    const ChainPoset p = c.poset();
    const auto ideals = enumerate_ideals(p);
    for (const auto& a : ideals) {
      for (const auto& b : ideals) {
        EXPECT_TRUE(is_ideal(p, meet(a, b)));
        EXPECT_TRUE(is_ideal(p, join(a, b)));
      }
    }
    EXPECT_EQ(ideals.front().level(), 0);
    EXPECT_EQ(ideals.back(), p.top());
  }
}

}  // namespace
}  // namespace latdet
