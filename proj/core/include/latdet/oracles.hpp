#pragma once

// Reference implementations used to certify engine results. None of them
// calls into the engines or adapters beyond evaluate(); agreement between an
// oracle and an engine is a genuine cross-check.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "latdet/adapter.hpp"
#include "latdet/bit_matrix.hpp"
#include "latdet/instances.hpp"

namespace latdet {

struct OracleReport {
  /// Every ideal satisfying B, in lexicographic order.
  std::vector<GlobalState> satisfying_states;
  /// Present iff the satisfying set has a least element.
  std::optional<GlobalState> least;
  /// Present iff the satisfying set has a greatest element.
  std::optional<GlobalState> greatest;
  std::set<std::int64_t> levels;

  bool satisfiable() const noexcept { return !satisfying_states.empty(); }
};

OracleReport brute_force_detect(const PredicateAdapter& adapter, const ChainPoset& poset,
                                std::uint64_t budget = kDefaultIdealBudget);

struct SpanningForest {
  std::vector<std::size_t> edges;  // indices into the graph's edge list, selection order
  std::int64_t weight = 0;
};

/// Union-find Kruskal; edges considered by (weight, index).
SpanningForest kruskal_mst(const WeightedGraph& g);

/// Minimum weight over all spanning forests by exhaustive subset search.
std::int64_t exhaustive_min_spanning_weight(const WeightedGraph& g);

/// Man-proposing deferred acceptance. Returns each man's choice index.
std::vector<int> gale_shapley(const MarriageInstance& inst);

/// wife[m] is man m's partner; checks for blocking pairs.
bool is_stable(const MarriageInstance& inst, const std::vector<int>& wife);

/// Every stable marriage as per-man choice-index vectors, lexicographic.
std::vector<std::vector<int>> all_stable_marriages(const MarriageInstance& inst);

/// Top Trading Cycles. house[i] is the house allocated to agent i.
std::vector<int> top_trading_cycles(const HousingInstance& inst);

/// A coalition of agents that can reallocate its own endowments so every
/// member strictly improves on `house`, if one exists.
std::optional<std::vector<int>> blocking_coalition(const HousingInstance& inst,
                                                   const std::vector<int>& house);

/// Reflexive-transitive closure by Floyd-Warshall.
std::vector<std::vector<bool>> floyd_warshall_closure(const Digraph& d);

/// Reflexive-transitive closure by one breadth-first search per row.
BitMatrix worklist_closure(const BitMatrix& adjacency);

bool subset_sum_dp(const std::vector<std::int64_t>& x, std::int64_t k);

/// One process per value with two predicate-true local states storing 0
/// and x_i events. An empty list yields a single process with no events.
Computation build_subset_sum_computation(const std::vector<std::int64_t>& x);

/// Maximum bipartite matching size by augmenting paths.
int max_matching(const BipartiteInstance& inst);

/// Rank over the rationals.
int rational_rank(const VectorSet& s);

}  // namespace latdet
