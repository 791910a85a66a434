#include "latdet/engines.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "latdet/bit_matrix.hpp"
#include "latdet/error.hpp"
#include "latdet/parallel.hpp"

namespace latdet {

namespace {

void require_hooks(const PredicateAdapter& adapter, Hook needed, const char* engine) {
  if ((static_cast<unsigned>(adapter.hooks()) & static_cast<unsigned>(needed)) !=
      static_cast<unsigned>(needed)) {
    throw Unsupported(std::string(engine) + " cannot run on " + std::string(adapter.name()) +
                      ": required hooks missing");
  }
}

void require_same_poset(const PredicateAdapter& adapter, const ChainPoset& poset) {
  const auto a = adapter.poset().heights();
  const auto b = poset.heights();
  if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) {
    throw InvalidInput("poset does not match the adapter's chains");
  }
}

[[noreturn]] void violation(const PredicateAdapter& adapter, const std::string& what,
                            const GlobalState& g) {
  throw ContractViolation(std::string(adapter.name()) + ": " + what + " at " + g.to_string());
}

bool valid_index_set(const IndexSet& set, std::size_t n) {
  return std::is_sorted(set.begin(), set.end()) &&
         std::adjacent_find(set.begin(), set.end()) == set.end() &&
         (set.empty() || set.back() < n);
}

/// Apply a batch of single-chain advances checked against the snapshot.
GlobalState advance_batch(const PredicateAdapter& adapter, const ChainPoset& poset,
                          const GlobalState& g, const IndexSet& batch, bool require_ideal) {
  if (!valid_index_set(batch, poset.chains())) violation(adapter, "malformed index set", g);
  GlobalState next = g;
  for (std::size_t i : batch) {
    if (g[i] >= poset.height(i)) {
      violation(adapter, "selected chain " + std::to_string(i) + " is at its top", g);
    }
    ++next[i];
  }
  if (require_ideal && !is_ideal(poset, next)) {
    violation(adapter, "batch advance left the lattice", g);
  }
  return next;
}

enum class Selection { Helpful, Independent };

DetectionOutcome walk_up(PredicateAdapter& adapter, const ChainPoset& poset, Selection mode) {
  GlobalState g = poset.bottom();
  const GlobalState top = poset.top();
  std::size_t rounds = 0;
  std::size_t advancements = 0;
  adapter.commit(g);
  while (!adapter.evaluate(g)) {
    if (g == top) return DetectionOutcome::not_found(rounds, advancements);
    IndexSet batch;
    if (mode == Selection::Helpful) {
      const IndexSet helpful = adapter.helpful_set(g);
      if (helpful.empty()) violation(adapter, "empty helpful set on an unsatisfied state", g);
      if (!valid_index_set(helpful, poset.chains())) violation(adapter, "malformed index set", g);
      batch = {helpful.front()};
    } else {
      batch = adapter.independent_set(g);
      if (batch.empty()) violation(adapter, "empty independent set on an unsatisfied state", g);
    }
    g = advance_batch(adapter, poset, g, batch, true);
    ++rounds;
    advancements += batch.size();
    adapter.commit(g);
  }
  return DetectionOutcome::found_at(std::move(g), rounds, advancements);
}

}  // namespace

DetectionOutcome detect_helpful(PredicateAdapter& adapter, const ChainPoset& poset,
                                const EngineOptions&) {
  require_hooks(adapter, Hook::Helpful, "detect_helpful");
  require_same_poset(adapter, poset);
  return walk_up(adapter, poset, Selection::Helpful);
}

DetectionOutcome detect_independently_helpful(PredicateAdapter& adapter, const ChainPoset& poset,
                                              const EngineOptions&) {
  require_hooks(adapter, Hook::Independent, "detect_independently_helpful");
  require_same_poset(adapter, poset);
  return walk_up(adapter, poset, Selection::Independent);
}

DetectionOutcome detect_llp(PredicateAdapter& adapter, const ChainPoset& poset,
                            const EngineOptions& options) {
  require_hooks(adapter, Hook::Forbidden, "detect_llp");
  require_same_poset(adapter, poset);
  GlobalState g = poset.bottom();
  std::size_t rounds = 0;
  std::size_t advancements = 0;
  adapter.commit(g);
  while (!adapter.evaluate(g)) {
    const IndexSet forbidden = forbidden_set(adapter, g, options.workers);
    if (forbidden.empty()) violation(adapter, "no forbidden chain on an unsatisfied state", g);
    for (std::size_t i : forbidden) {
      if (g[i] >= poset.height(i)) return DetectionOutcome::not_found(rounds, advancements);
    }
    // Intermediate states may be inconsistent cuts; consistency is part of B.
    g = advance_batch(adapter, poset, g, forbidden, false);
    ++rounds;
    advancements += forbidden.size();
    adapter.commit(g);
  }
  return DetectionOutcome::found_at(std::move(g), rounds, advancements);
}

DetectionOutcome detect_bidirectional(PredicateAdapter& adapter, const ChainPoset& poset,
                                      const EngineOptions& options) {
  require_hooks(adapter, Hook::Forbidden | Hook::DualForbidden, "detect_bidirectional");
  require_same_poset(adapter, poset);
  GlobalState low = poset.bottom();
  GlobalState high = poset.top();
  std::size_t rounds = 0;
  std::size_t moves = 0;
  while (true) {
    if (adapter.evaluate(low)) return DetectionOutcome::found_at(std::move(low), rounds, moves);
    if (adapter.evaluate(high)) return DetectionOutcome::found_at(std::move(high), rounds, moves);
    // The least satisfying state stays above low and the greatest below
    // high, so frontiers that cross prove the predicate unsatisfiable.
    if (!low.precedes_or_equals(high)) return DetectionOutcome::not_found(rounds, moves);

    const IndexSet up = forbidden_set(adapter, low, options.workers);
    if (up.empty()) violation(adapter, "no forbidden chain on an unsatisfied state", low);
    for (std::size_t i : up) {
      if (low[i] >= poset.height(i)) return DetectionOutcome::not_found(rounds, moves);
    }
    const IndexSet down = dual_forbidden_set(adapter, high, options.workers);
    if (down.empty()) violation(adapter, "no dual-forbidden chain on an unsatisfied state", high);
    for (std::size_t j : down) {
      if (high[j] == 0) return DetectionOutcome::not_found(rounds, moves);
    }
    for (std::size_t i : up) ++low[i];
    for (std::size_t j : down) --high[j];
    ++rounds;
    moves += up.size() + down.size();
  }
}

EdgeSelection detect_parallel_mst_unique(std::span<const WeightedEdge> sorted_edges,
                                         int vertex_count, const EngineOptions& options) {
  if (vertex_count < 0) throw InvalidInput("parallel MST: negative vertex count");
  for (std::size_t j = 0; j < sorted_edges.size(); ++j) {
    const auto& e = sorted_edges[j];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count || e.u == e.v) {
      throw InvalidInput("parallel MST: invalid edge endpoints");
    }
    if (j > 0 && sorted_edges[j - 1].weight >= e.weight) {
      throw InvalidInput(sorted_edges[j - 1].weight == e.weight
                             ? "parallel MST: duplicate weights"
                             : "parallel MST: edges not sorted by weight");
    }
  }
  const auto n = static_cast<std::size_t>(vertex_count);
  std::vector<std::vector<std::pair<int, std::size_t>>> adjacency(n);
  for (std::size_t j = 0; j < sorted_edges.size(); ++j) {
    adjacency[static_cast<std::size_t>(sorted_edges[j].u)].push_back({sorted_edges[j].v, j});
    adjacency[static_cast<std::size_t>(sorted_edges[j].v)].push_back({sorted_edges[j].u, j});
  }

  std::vector<char> selected(sorted_edges.size(), 0);
  // Each edge reads only the immutable graph: one superstep.
  parallel_for(sorted_edges.size(), options.workers, [&](std::size_t j) {
    const int from = sorted_edges[j].u;
    const int to = sorted_edges[j].v;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{from};
    seen[static_cast<std::size_t>(from)] = 1;
    bool connected = false;
    while (!stack.empty() && !connected) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [y, k] : adjacency[static_cast<std::size_t>(x)]) {
        if (k >= j || seen[static_cast<std::size_t>(y)]) continue;
        if (y == to) {
          connected = true;
          break;
        }
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
    selected[j] = !connected;
  });
  return {std::vector<bool>(selected.begin(), selected.end()), 1};
}

DetectionOutcome detect_by_rejection(PredicateAdapter& adapter, const ChainPoset& poset,
                                     const EngineOptions& options) {
  require_hooks(adapter, Hook::Rejection, "detect_by_rejection");
  require_same_poset(adapter, poset);
  const RejectionGraph graph = adapter.rejection_graph();
  const auto heights = poset.heights();
  if (!std::equal(graph.heights.begin(), graph.heights.end(), heights.begin(), heights.end())) {
    throw InvalidInput("rejection graph nodes do not match the poset");
  }

  const std::size_t n = poset.chains();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i + 1] = offset[i] + static_cast<std::size_t>(heights[i]) + 1;
  }
  const auto node = [&](const LocalState& s) {
    if (s.chain >= n || s.position < 0 || s.position > heights[s.chain]) {
      throw InvalidInput("rejection graph refers to a nonexistent local state");
    }
    return offset[s.chain] + static_cast<std::size_t>(s.position);
  };

  BitMatrix relation(offset[n]);
  for (const auto& [from, to] : graph.edges) relation.set(node(from), node(to));
  // Eliminating every state up to p+1 eliminates every state up to p.
  for (std::size_t i = 0; i < n; ++i) {
    for (int p = 0; p < heights[i]; ++p) relation.set(offset[i] + p + 1, offset[i] + p);
  }
  const ClosureResult closure = reflexive_transitive_closure(relation, options.workers);

  std::vector<char> invalid(offset[n], 0);
  for (const auto& seed : graph.seeds) {
    const auto row = closure.reach.row(node(seed));
    for (std::size_t v = 0; v < offset[n]; ++v) {
      if ((row[v / 64] >> (v % 64)) & 1u) invalid[v] = 1;
    }
  }

  std::vector<int> least(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    int p = 0;
    while (p <= heights[i] && invalid[offset[i] + static_cast<std::size_t>(p)]) ++p;
    if (p > heights[i]) return DetectionOutcome::not_found(closure.squarings, 0);
    least[i] = p;
  }
  GlobalState g(std::move(least));
  if (!adapter.evaluate(g)) violation(adapter, "rejection graph does not certify its result", g);
  const auto advancements = static_cast<std::size_t>(g.level());
  return DetectionOutcome::found_at(std::move(g), closure.squarings, advancements);
}

}  // namespace latdet
