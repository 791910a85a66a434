#pragma once

// Problem instances. Each type validates its own invariants; adapters and
// oracles call validate() before touching the data.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "latdet/lattice.hpp"

namespace latdet {

struct BipartiteInstance {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::pair<int, int>> edges;  // (left, right)

  void validate() const;
  friend bool operator==(const BipartiteInstance&, const BipartiteInstance&) = default;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct WeightedGraph {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;
  bool unique_weights = false;

  /// Simple graph: in-range endpoints, no loops, no parallel edges; distinct
  /// weights when unique_weights is set.
  void validate() const;
  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

/// Edge indices of `g` ordered by (weight, index).
std::vector<std::size_t> weight_order(const WeightedGraph& g);

struct VectorSet {
  int dimension = 0;
  std::vector<std::vector<std::int64_t>> vectors;

  void validate() const;
  friend bool operator==(const VectorSet&, const VectorSet&) = default;
};

/// mpref[m][k] is man m's k-th choice (0-based); rank[w][m] is woman w's
/// rank of man m, lower is better.
struct MarriageInstance {
  int n = 0;
  std::vector<std::vector<int>> mpref;
  std::vector<std::vector<int>> rank;

  void validate() const;
  friend bool operator==(const MarriageInstance&, const MarriageInstance&) = default;
};

/// Agent i initially owns house i; pref[i][k] is agent i's k-th house.
struct HousingInstance {
  int n = 0;
  std::vector<std::vector<int>> pref;

  void validate() const;
  friend bool operator==(const HousingInstance&, const HousingInstance&) = default;
};

/// A distributed computation: per-process events carrying vector clocks and
/// a local predicate on every local state.
///
/// clocks[i][e] is the vector clock of event e+1 of process i: entry j is
/// the number of events of process j in its causal past (itself included,
/// so clocks[i][e][i] == e+1). local_predicate[i][s] is the truth of l_i in
/// local state s (0..events(i)). state_counts, when non-empty, replaces the
/// event count of each local state for level purposes (the compact
/// encoding that keeps only predicate-true states).
struct Computation {
  std::vector<std::vector<std::vector<int>>> clocks;
  std::vector<std::vector<bool>> local_predicate;
  std::vector<std::vector<std::int64_t>> state_counts;

  std::size_t process_count() const noexcept { return local_predicate.size(); }
  int events(std::size_t i) const { return static_cast<int>(clocks[i].size()); }

  void validate() const;
  ChainPoset poset() const;
  /// Number of events in the cut, honoring state_counts.
  std::int64_t level(const GlobalState& g) const;

  friend bool operator==(const Computation&, const Computation&) = default;
};

/// Computation with no messages: every process's clock only counts itself.
Computation independent_computation(std::vector<std::vector<bool>> local_predicate);

struct Digraph {
  int vertex_count = 0;
  std::vector<std::vector<bool>> adjacency;
  int source = 0;

  void validate() const;
  bool edge(int i, int j) const { return adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  friend bool operator==(const Digraph&, const Digraph&) = default;
};

/// Undirected graph for the minimum vertex cover predicate.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

}  // namespace latdet
