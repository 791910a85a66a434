#include "latdet/instances.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "latdet/error.hpp"

namespace latdet {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

bool is_permutation_of_range(const std::vector<int>& row, int n) {
  if (static_cast<int>(row.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : row) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

void BipartiteInstance::validate() const {
  require(left_count >= 0 && right_count >= 0, "bipartite: negative side size");
  std::set<std::pair<int, int>> seen;
  for (const auto& [l, r] : edges) {
    require(l >= 0 && l < left_count && r >= 0 && r < right_count, "bipartite: edge out of range");
    require(seen.insert({l, r}).second, "bipartite: duplicate edge");
  }
}

void WeightedGraph::validate() const {
  require(vertex_count >= 0, "graph: negative vertex count");
  std::set<std::pair<int, int>> seen;
  std::set<std::int64_t> weights;
  for (const auto& e : edges) {
    require(e.u >= 0 && e.u < vertex_count && e.v >= 0 && e.v < vertex_count,
            "graph: edge endpoint out of range");
    require(e.u != e.v, "graph: self-loop");
    require(seen.insert(std::minmax(e.u, e.v)).second, "graph: parallel edge");
    if (unique_weights) require(weights.insert(e.weight).second, "graph: duplicate weight");
  }
}

std::vector<std::size_t> weight_order(const WeightedGraph& g) {
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return g.edges[a].weight < g.edges[b].weight;
  });
  return order;
}

void VectorSet::validate() const {
  require(dimension >= 0, "vectors: negative dimension");
  for (const auto& v : vectors) {
    require(static_cast<int>(v.size()) == dimension, "vectors: non-uniform dimension");
  }
}

void MarriageInstance::validate() const {
  require(n >= 1, "marriage: need at least one man and one woman");
  require(static_cast<int>(mpref.size()) == n && static_cast<int>(rank.size()) == n,
          "marriage: preference tables must have n rows");
  for (const auto& row : mpref) {
    require(is_permutation_of_range(row, n), "marriage: mpref row is not a permutation of women");
  }
  for (const auto& row : rank) {
    require(static_cast<int>(row.size()) == n, "marriage: rank row has wrong length");
    std::set<int> distinct(row.begin(), row.end());
    require(static_cast<int>(distinct.size()) == n, "marriage: rank row assigns a rank twice");
  }
}

void HousingInstance::validate() const {
  require(n >= 1, "housing: need at least one agent");
  require(static_cast<int>(pref.size()) == n, "housing: pref must have n rows");
  for (const auto& row : pref) {
    require(is_permutation_of_range(row, n), "housing: pref row is not a permutation of houses");
  }
}

void Computation::validate() const {
  const std::size_t n = process_count();
  require(n >= 1, "computation: need at least one process");
  require(clocks.size() == n, "computation: clocks and predicates disagree on process count");
  for (std::size_t i = 0; i < n; ++i) {
    require(local_predicate[i].size() == clocks[i].size() + 1,
            "computation: local predicate needs one entry per local state");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t e = 0; e < clocks[i].size(); ++e) {
      const auto& vc = clocks[i][e];
      require(vc.size() == n, "computation: vector clock has wrong dimension");
      require(vc[i] == static_cast<int>(e) + 1, "computation: clock disagrees with process order");
      for (std::size_t j = 0; j < n; ++j) {
        require(vc[j] >= 0 && vc[j] <= events(j), "computation: clock entry out of range");
        if (e > 0) {
          require(vc[j] >= clocks[i][e - 1][j], "computation: clock decreases along a process");
        }
        if (j == i || vc[j] == 0) continue;
        const auto& past = clocks[j][static_cast<std::size_t>(vc[j] - 1)];
        for (std::size_t k = 0; k < n; ++k) {
          require(past[k] <= vc[k], "computation: clocks are not transitively closed");
        }
        require(past[i] < vc[i], "computation: clocks form a causal cycle");
      }
    }
  }
  if (!state_counts.empty()) {
    require(state_counts.size() == n, "computation: state_counts needs one row per process");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = state_counts[i];
      require(row.size() == clocks[i].size() + 1, "computation: state_counts row has wrong length");
      for (std::size_t s = 0; s < row.size(); ++s) {
        require(row[s] >= 0, "computation: negative state count");
        if (s > 0) require(row[s] >= row[s - 1], "computation: state counts must not decrease");
      }
    }
  }
}

ChainPoset Computation::poset() const {
  validate();
  const std::size_t n = process_count();
  std::vector<int> heights(n);
  std::vector<CausalEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    heights[i] = events(i);
    for (std::size_t e = 0; e < clocks[i].size(); ++e) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const int c = clocks[i][e][j];
        // Dependencies already implied by the previous event are redundant.
        if (c == 0 || (e > 0 && clocks[i][e - 1][j] >= c)) continue;
        edges.push_back({{j, c}, {i, static_cast<int>(e) + 1}});
      }
    }
  }
  return ChainPoset(std::move(heights), std::move(edges));
}

std::int64_t Computation::level(const GlobalState& g) const {
  if (g.size() != process_count()) throw InvalidInput("computation: cut has wrong dimension");
  if (state_counts.empty()) return g.level();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    total += state_counts[i].at(static_cast<std::size_t>(g[i]));
  }
  return total;
}

Computation independent_computation(std::vector<std::vector<bool>> local_predicate) {
  Computation c;
  const std::size_t n = local_predicate.size();
  c.clocks.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (local_predicate[i].empty()) throw InvalidInput("computation: process without states");
    for (std::size_t e = 0; e + 1 < local_predicate[i].size(); ++e) {
      std::vector<int> vc(n, 0);
      vc[i] = static_cast<int>(e) + 1;
      c.clocks[i].push_back(std::move(vc));
    }
  }
  c.local_predicate = std::move(local_predicate);
  return c;
}

void Digraph::validate() const {
  require(vertex_count >= 1, "digraph: need at least one vertex");
  require(static_cast<int>(adjacency.size()) == vertex_count, "digraph: matrix must be square");
  for (const auto& row : adjacency) {
    require(static_cast<int>(row.size()) == vertex_count, "digraph: matrix must be square");
  }
  require(source >= 0 && source < vertex_count, "digraph: source out of range");
}

void SimpleGraph::validate() const {
  require(vertex_count >= 1, "graph: need at least one vertex");
  for (const auto& [u, v] : edges) {
    require(u >= 0 && u < vertex_count && v >= 0 && v < vertex_count,
            "graph: edge endpoint out of range");
  }
}

}  // namespace latdet
