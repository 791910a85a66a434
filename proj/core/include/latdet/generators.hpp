#pragma once

// Deterministic pseudo-random instances. A given (parameters, seed) pair
// always yields the same instance on every platform: only std::mt19937_64
// output is consumed, never the implementation-defined distributions.

#include <cstdint>
#include <random>
#include <vector>

#include "latdet/instances.hpp"

namespace latdet {

class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin(double p_true = 0.5);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
    }
  }
  std::vector<int> permutation(int n);

 private:
  std::mt19937_64 engine_;
};

/// Each left-right pair is an edge with probability `density`.
BipartiteInstance random_bipartite(int left, int right, double density, std::uint64_t seed);

/// Connected graph: a random spanning tree plus each remaining pair with
/// probability `extra_density`. Weights are a random permutation of
/// 1..m when `unique`, else drawn from 1..max(1, m/2).
WeightedGraph random_connected_graph(int vertices, double extra_density, bool unique,
                                     std::uint64_t seed);

VectorSet random_vectors(int count, int dimension, int max_abs, std::uint64_t seed);

MarriageInstance random_marriage(int n, std::uint64_t seed);

HousingInstance random_housing(int n, std::uint64_t seed);

/// `processes` processes with up to `max_events` events each; every event
/// other than the first on a process receives a message from an earlier
/// event of another process with probability `message_density`. Each local
/// predicate is true with probability `truth_density`.
Computation random_computation(int processes, int max_events, double message_density,
                               double truth_density, std::uint64_t seed);

Digraph random_digraph(int vertices, double density, std::uint64_t seed);

SimpleGraph random_simple_graph(int vertices, double density, std::uint64_t seed);

std::vector<std::int64_t> random_subset_list(int max_len, std::int64_t max_value,
                                             std::uint64_t seed);

}  // namespace latdet
