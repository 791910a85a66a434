// Randomized invariants of the adapter hooks, each checked against an
// exhaustive scan of the lattice.

#include <gtest/gtest.h>

#include <functional>
#include <memory>
#include <string_view>

#include "latdet/engines.hpp"
#include "latdet/error.hpp"
#include "latdet/generators.hpp"
#include "latdet/oracles.hpp"
#include "latdet/problems.hpp"

namespace latdet {
namespace {

using AdapterPtr = std::unique_ptr<PredicateAdapter>;
using Factory = std::function<AdapterPtr(std::uint64_t seed)>;

struct Lattice {
  std::vector<GlobalState> ideals;
  std::vector<GlobalState> satisfying;

  explicit Lattice(const PredicateAdapter& a) : ideals(enumerate_ideals(a.poset())) {
    satisfying = brute_force_detect(a, a.poset()).satisfying_states;
  }
  bool satisfiable_above(const GlobalState& g) const {
    return std::any_of(satisfying.begin(), satisfying.end(),
                       [&](const GlobalState& h) { return g.precedes_or_equals(h); });
  }
  // Some satisfying H >= g (or <= g when `below`) agrees with g on chain i.
  bool satisfiable_fixing(std::size_t i, const GlobalState& g, bool below) const {
    return std::any_of(satisfying.begin(), satisfying.end(), [&](const GlobalState& h) {
      return h[i] == g[i] && (below ? h.precedes_or_equals(g) : g.precedes_or_equals(h));
    });
  }
};

// The vector (not necessarily an ideal) of the product of chains.
std::vector<GlobalState> product_states(const ChainPoset& p) {
  return enumerate_ideals(ChainPoset(std::vector<int>(p.heights().begin(), p.heights().end())));
}

GlobalState plus(GlobalState g, const IndexSet& set) {
  for (auto i : set) ++g[i];
  return g;
}

const std::vector<std::pair<const char*, Factory>>& helpful_factories() {
  static const std::vector<std::pair<const char*, Factory>> f{
      {"matching", [](std::uint64_t s) { return matching_adapter(random_bipartite(5, 4, 0.35, s)); }},
      {"spanning-tree",
       [](std::uint64_t s) { return spanning_tree_adapter(random_connected_graph(5, 0.5, false, s)); }},
      {"basis", [](std::uint64_t s) { return basis_adapter(random_vectors(6, 3, 2, s)); }},
  };
  return f;
}

TEST(HelpfulProperty, AdvancingAHelpfulIndexKeepsASolutionReachable) {
  for (const auto& [name, make] : helpful_factories()) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      AdapterPtr a = make(seed);
      const Lattice lat(*a);
      for (const auto& g : lat.ideals) {
        if (a->evaluate(g) || !lat.satisfiable_above(g)) continue;
        a->commit(g);
        const IndexSet helpful = a->helpful_set(g);
        ASSERT_FALSE(helpful.empty()) << name << " seed " << seed << " at " << g.to_string();
        for (auto i : helpful) {
          EXPECT_TRUE(lat.satisfiable_above(plus(g, {i})))
              << name << " seed " << seed << " index " << i << " at " << g.to_string();
        }
      }
    }
  }
}

TEST(HelpfulProperty, SatisfyingStatesShareOneLevel) {
  for (const auto& [name, make] : helpful_factories()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      AdapterPtr a = make(seed + 500);
      EXPECT_EQ(brute_force_detect(*a, a->poset()).levels.size(), 1u) << name << " seed " << seed;
    }
  }
}

TEST(IndependentProperty, BoruvkaBatchesAreSafeEverywhere) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    AdapterPtr a = boruvka_adapter(random_connected_graph(6, 0.4, true, seed));
    const Lattice lat(*a);
    for (const auto& g : lat.ideals) {
      if (a->evaluate(g) || !lat.satisfiable_above(g)) continue;
      const IndexSet batch = a->independent_set(g);
      ASSERT_FALSE(batch.empty());
      EXPECT_TRUE(lat.satisfiable_above(plus(g, batch))) << "seed " << seed << " at " << g.to_string();
    }
  }
}

const std::vector<std::pair<const char*, Factory>>& forbidden_factories() {
  static const std::vector<std::pair<const char*, Factory>> f{
      {"marriage", [](std::uint64_t s) { return stable_marriage_adapter(random_marriage(1 + s % 4, s)); }},
      {"housing", [](std::uint64_t s) { return housing_adapter(random_housing(1 + s % 5, s)); }},
      {"conjunctive",
       [](std::uint64_t s) { return conjunctive_adapter(random_computation(3, 3, 0.5, 0.6, s)); }},
      {"mst-unique",
       [](std::uint64_t s) { return mst_unique_adapter(random_connected_graph(5, 0.5, true, s)); }},
      {"reach", [](std::uint64_t s) { return reachability_adapter(random_digraph(6, 0.25, s)); }},
      {"closure", [](std::uint64_t s) { return closure_adapter(random_digraph(3, 0.3, s)); }},
  };
  return f;
}

TEST(ForbiddenProperty, SoundEverywhereAndCompleteBelowASolution) {
  for (const auto& [name, make] : forbidden_factories()) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      AdapterPtr a = make(seed);
      const Lattice lat(*a);
      for (const auto& g : product_states(a->poset())) {
        const IndexSet forbidden = forbidden_set(*a, g);
        if (!a->evaluate(g) && lat.satisfiable_above(g)) {
          EXPECT_FALSE(forbidden.empty()) << name << " seed " << seed << " at " << g.to_string();
        }
        for (auto i : forbidden) {
          EXPECT_FALSE(lat.satisfiable_fixing(i, g, false))
              << name << " seed " << seed << " chain " << i << " at " << g.to_string();
        }
      }
    }
  }
}

TEST(ForbiddenProperty, ForbiddenStaysForbiddenUntilAdvanced) {
  for (const auto& [name, make] : forbidden_factories()) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      AdapterPtr a = make(seed + 100);
      auto states = product_states(a->poset());
      if (states.size() > 300) continue;
      // A housing proposal cycle can dissolve once a member moves past the
      // solution, so housing is only required to be stable below it.
      const auto report = brute_force_detect(*a, a->poset());
      if (std::string_view(name) == "housing") {
        std::erase_if(states, [&](const GlobalState& h) { return !h.precedes_or_equals(*report.least); });
      }
      for (const auto& g : states) {
        for (auto i : forbidden_set(*a, g)) {
          for (const auto& h : states) {
            if (h[i] != g[i] || !g.precedes_or_equals(h)) continue;
            EXPECT_TRUE(a->forbidden(i, h)) << name << " seed " << seed << " chain " << i;
          }
        }
      }
    }
  }
}

TEST(ForbiddenProperty, LlpReturnsTheLeastSatisfyingState) {
  for (const auto& [name, make] : forbidden_factories()) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      AdapterPtr a = make(seed + 200);
      const auto report = brute_force_detect(*a, a->poset());
      const auto out = detect_llp(*a, a->poset());
      ASSERT_EQ(out.found(), report.satisfiable()) << name << " seed " << seed;
      if (out.found()) EXPECT_EQ(out.state, report.least) << name << " seed " << seed;
    }
  }
}

TEST(ForbiddenProperty, CommonSolitaryPredicates) {
  // At most one satisfying state for the unique-MST, housing and closure
  // predicates; exactly one least stable marriage.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (const auto& a : {mst_unique_adapter(random_connected_graph(5, 0.6, true, seed)),
                          housing_adapter(random_housing(1 + seed % 5, seed)),
                          closure_adapter(random_digraph(1 + seed % 4, 0.3, seed))}) {
      EXPECT_EQ(brute_force_detect(*a, a->poset()).satisfying_states.size(), 1u)
          << a->name() << " seed " << seed;
    }
  }
}

TEST(DualForbiddenProperty, SoundEverywhereAndCompleteAboveASolution) {
  const std::vector<std::pair<const char*, Factory>> factories{
      {"marriage", [](std::uint64_t s) { return stable_marriage_adapter(random_marriage(1 + s % 4, s)); }},
      {"conjunctive",
       [](std::uint64_t s) { return conjunctive_adapter(random_computation(3, 3, 0.5, 0.6, s)); }},
  };
  for (const auto& [name, make] : factories) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      AdapterPtr a = make(seed);
      const Lattice lat(*a);
      for (const auto& g : product_states(a->poset())) {
        const IndexSet dual = dual_forbidden_set(*a, g);
        const bool below = std::any_of(lat.satisfying.begin(), lat.satisfying.end(),
                                       [&](const GlobalState& h) { return h.precedes_or_equals(g); });
        if (!a->evaluate(g) && below) {
          EXPECT_FALSE(dual.empty()) << name << " seed " << seed << " at " << g.to_string();
        }
        for (auto i : dual) {
          EXPECT_FALSE(lat.satisfiable_fixing(i, g, true))
              << name << " seed " << seed << " chain " << i << " at " << g.to_string();
        }
      }
    }
  }
}

TEST(DualForbiddenProperty, AllFourByFourMarriagesViaTheirGreatestElement) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const MarriageInstance inst = random_marriage(4, seed + 900);
    auto a = stable_marriage_adapter(inst);
    const auto report = brute_force_detect(*a, a->poset());
    const auto all = all_stable_marriages(inst);
    ASSERT_EQ(report.satisfying_states.size(), all.size());
    const auto out = detect_bidirectional(*a, a->poset());
    ASSERT_TRUE(out.found());
    EXPECT_TRUE(out.state == report.least || out.state == report.greatest);
  }
}

TEST(LatticeClosure, SatisfyingSetsAreClosedUnderMeetAndJoin) {
  const std::vector<Factory> factories{
      [](std::uint64_t s) { return stable_marriage_adapter(random_marriage(1 + s % 5, s)); },
      [](std::uint64_t s) { return conjunctive_adapter(random_computation(4, 3, 0.5, 0.7, s)); },
  };
  for (const auto& make : factories) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      AdapterPtr a = make(seed);
      const auto sat = brute_force_detect(*a, a->poset()).satisfying_states;
      for (const auto& x : sat) {
        for (const auto& y : sat) {
          EXPECT_TRUE(a->evaluate(meet(x, y))) << a->name() << " seed " << seed;
          EXPECT_TRUE(a->evaluate(join(x, y))) << a->name() << " seed " << seed;
        }
      }
      // Hence the least-element refinement holds on exactly one state.
      int least = 0;
      for (const auto& x : sat) {
        least += std::none_of(sat.begin(), sat.end(), [&](const GlobalState& y) {
          return y != x && y.precedes_or_equals(x);
        });
      }
      EXPECT_EQ(least, sat.empty() ? 0 : 1);
    }
  }
}

TEST(AntimonotoneProperty, UniqueMstNonForbiddenStaysNonForbidden) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const WeightedGraph g = random_connected_graph(1 + static_cast<int>(seed % 6), 0.5, true, seed);
    if (g.edges.size() > 9) continue;
    auto a = mst_unique_adapter(g);
    const auto states = enumerate_ideals(a->poset());
    for (const auto& low : states) {
      for (std::size_t i = 0; i < low.size(); ++i) {
        if (a->forbidden(i, low)) continue;
        for (const auto& high : states) {
          if (high[i] != low[i] || !low.precedes_or_equals(high)) continue;
          EXPECT_FALSE(a->forbidden(i, high)) << "seed " << seed;
        }
      }
    }
  }
}

TEST(RejectionProperty, EdgesAndSeedsAreSemanticallySound) {
  const std::vector<Factory> factories{
      [](std::uint64_t s) { return conjunctive_adapter(random_computation(3, 4, 0.5, 0.6, s)); },
      [](std::uint64_t s) { return reachability_adapter(random_digraph(7, 0.2, s)); },
      [](std::uint64_t s) { return closure_adapter(random_digraph(3, 0.3, s)); },
  };
  for (const auto& make : factories) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      AdapterPtr a = make(seed);
      const auto sat = brute_force_detect(*a, a->poset()).satisfying_states;
      const RejectionGraph r = a->rejection_graph();
      for (const auto& h : sat) {
        for (const auto& s : r.seeds) EXPECT_GT(h[s.chain], s.position) << a->name();
        for (const auto& [from, to] : r.edges) {
          if (h[from.chain] > from.position) EXPECT_GT(h[to.chain], to.position) << a->name();
        }
      }
    }
  }
}

TEST(OnlineProperty, MarriageHooksIgnoreUnproposedChoices) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const MarriageInstance inst = random_marriage(4, seed);
    auto a = stable_marriage_adapter(inst);
    ASSERT_TRUE(a->online());
    Rng rng(seed);
    for (const auto& g : product_states(a->poset())) {
      // Scramble every man's list beyond his current proposal.
      MarriageInstance cut = inst;
      for (std::size_t m = 0; m < 4; ++m) {
        auto& row = cut.mpref[m];
        std::vector<int> tail(row.begin() + g[m] + 1, row.end());
        rng.shuffle(tail);
        std::copy(tail.begin(), tail.end(), row.begin() + g[m] + 1);
      }
      auto b = stable_marriage_adapter(cut);
      EXPECT_EQ(forbidden_set(*a, g), forbidden_set(*b, g)) << "seed " << seed;
    }
  }
}

TEST(OnlineProperty, HousingHooksIgnoreUnproposedChoices) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const HousingInstance inst = random_housing(4, seed);
    auto a = housing_adapter(inst);
    ASSERT_TRUE(a->online());
    Rng rng(seed);
    for (const auto& g : product_states(a->poset())) {
      HousingInstance cut = inst;
      for (std::size_t i = 0; i < 4; ++i) {
        auto& row = cut.pref[i];
        std::vector<int> tail(row.begin() + g[i] + 1, row.end());
        rng.shuffle(tail);
        std::copy(tail.begin(), tail.end(), row.begin() + g[i] + 1);
      }
      auto b = housing_adapter(cut);
      EXPECT_EQ(forbidden_set(*a, g), forbidden_set(*b, g)) << "seed " << seed;
    }
  }
}

TEST(Determinism, WorkerCountDoesNotChangeResults) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (const auto& make : forbidden_factories()) {
      AdapterPtr a = make.second(seed + 300);
      const auto seq = detect_llp(*a, a->poset(), {0});
      const auto par = detect_llp(*a, a->poset(), {3});
      EXPECT_EQ(seq.state, par.state);
      EXPECT_EQ(seq.rounds, par.rounds);
      EXPECT_EQ(seq.advancements, par.advancements);
    }
  }
}

TEST(Generators, EveryInstanceValidatesAndIsReproducible) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    EXPECT_NO_THROW(random_bipartite(n, n + 1, 0.3, seed).validate());
    EXPECT_NO_THROW(random_vectors(n, 3, 3, seed).validate());
    EXPECT_NO_THROW(random_marriage(n, seed).validate());
    EXPECT_NO_THROW(random_housing(n, seed).validate());
    EXPECT_NO_THROW(random_computation(1 + n % 4, n, 0.5, 0.5, seed).validate());
    EXPECT_NO_THROW(random_digraph(n, 0.3, seed).validate());
    EXPECT_NO_THROW(random_simple_graph(n, 0.3, seed).validate());
    for (const bool unique : {false, true}) {
      const WeightedGraph g = random_connected_graph(1 + n, 0.4, unique, seed);
      EXPECT_NO_THROW(g.validate());
      EXPECT_EQ(kruskal_mst(g).edges.size(), static_cast<std::size_t>(n));
    }
    for (auto v : random_subset_list(n, 20, seed)) EXPECT_TRUE(v >= 1 && v <= 20);
    EXPECT_EQ(random_marriage(n, seed).mpref, random_marriage(n, seed).mpref);
  }
  EXPECT_THROW(random_marriage(0, 1), InvalidInput);
  EXPECT_THROW(random_digraph(0, 0.5, 1), InvalidInput);
  EXPECT_THROW(random_bipartite(2, 2, 1.5, 1), InvalidInput);
}

}  // namespace
}  // namespace latdet
