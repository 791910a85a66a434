#pragma once

// Generic detection engines. Every "in parallel" step is one bulk-synchronous
// superstep: hooks are evaluated against an immutable snapshot, the selected
// advances are applied as a batch, then the predicate is re-evaluated.

#include <cstddef>
#include <span>
#include <vector>

#include "latdet/adapter.hpp"
#include "latdet/instances.hpp"

namespace latdet {

struct EngineOptions {
  /// Threads used for per-chain hook evaluation; 0 or 1 runs sequentially.
  unsigned workers = 0;
};

/// Walk up from bottom, advancing the least helpful chain each step.
DetectionOutcome detect_helpful(PredicateAdapter& adapter, const ChainPoset& poset,
                                const EngineOptions& options = {});

/// Walk up from bottom, advancing every independently helpful chain per
/// superstep.
DetectionOutcome detect_independently_helpful(PredicateAdapter& adapter, const ChainPoset& poset,
                                              const EngineOptions& options = {});

/// Lattice-linear search: advance all forbidden chains per superstep. Returns
/// the least satisfying state, or NotFound as soon as a forbidden chain is
/// exhausted.
DetectionOutcome detect_llp(PredicateAdapter& adapter, const ChainPoset& poset,
                            const EngineOptions& options = {});

/// Forward search from bottom interleaved with a dual search from top. The
/// satisfying set must be closed under meet and join.
DetectionOutcome detect_bidirectional(PredicateAdapter& adapter, const ChainPoset& poset,
                                      const EngineOptions& options = {});

struct EdgeSelection {
  std::vector<bool> selected;
  std::size_t rounds = 0;
};

/// Unique-weight minimum spanning forest in one superstep: edge j is selected
/// iff its endpoints are disconnected by the strictly lighter edges.
/// `sorted_edges` must be strictly increasing by weight.
EdgeSelection detect_parallel_mst_unique(std::span<const WeightedEdge> sorted_edges,
                                         int vertex_count, const EngineOptions& options = {});

/// Offline search through the rejection relation: close it by repeated
/// squaring, invalidate everything a seed reaches, pick the least valid
/// position on each chain. rounds reports the number of squarings.
DetectionOutcome detect_by_rejection(PredicateAdapter& adapter, const ChainPoset& poset,
                                     const EngineOptions& options = {});

}  // namespace latdet
