#pragma once

// Predicate adapters for concrete problems.
//
// Boolean-lattice adapters (matching, spanning tree, Boruvka, unique MST,
// basis, reachability, closure, vertex cover) use one single-event chain
// per element; chain i at 1 means element i is chosen. The MST adapters
// order chains by (weight, edge index): chain k is edge weight_order(g)[k].

#include <cstdint>
#include <memory>

#include "latdet/adapter.hpp"
#include "latdet/instances.hpp"

namespace latdet {

/// Chosen left vertices form a maximum matchable set. Helpful hook.
std::unique_ptr<PredicateAdapter> matching_adapter(BipartiteInstance inst);

/// Chosen edges form a spanning forest. Helpful hook.
std::unique_ptr<PredicateAdapter> spanning_tree_adapter(WeightedGraph g);

/// Chosen edges form a spanning forest; the independent hook returns every
/// component's minimum outgoing edge. Requires unique weights.
std::unique_ptr<PredicateAdapter> boruvka_adapter(WeightedGraph g);

/// Chosen edges are exactly the unique minimum spanning forest. Forbidden
/// hook: an unchosen edge whose endpoints the lighter edges leave apart.
std::unique_ptr<PredicateAdapter> mst_unique_adapter(WeightedGraph g);

/// Chosen vectors form a basis of span(S). Helpful hook; exact arithmetic.
std::unique_ptr<PredicateAdapter> basis_adapter(VectorSet s);

/// Chain m holds man m's current choice index (0-based). Forbidden and
/// dual-forbidden hooks; B is "the assignment is a stable marriage".
std::unique_ptr<PredicateAdapter> stable_marriage_adapter(MarriageInstance inst);

/// Chain i holds the index of agent i's current proposal (0-based; in the
/// initial state everyone has made a first proposal). Forbidden hook.
std::unique_ptr<PredicateAdapter> housing_adapter(HousingInstance inst);

/// Consistent cut with every local predicate true. Forbidden, dual-forbidden
/// and rejection hooks. Searches the product of the process chains;
/// consistency is part of the predicate.
std::unique_ptr<PredicateAdapter> conjunctive_adapter(Computation c);

/// Chosen vertices are exactly those reachable from the source. Forbidden
/// and rejection hooks.
std::unique_ptr<PredicateAdapter> reachability_adapter(Digraph d);

/// n*n chains, chain i*n+j standing for cell (i,j); B holds exactly on the
/// reflexive-transitive closure of the adjacency matrix. Forbidden and
/// rejection hooks.
std::unique_ptr<PredicateAdapter> closure_adapter(Digraph d);

/// Chosen vertices form a minimum vertex cover (equilevel, no hooks).
std::unique_ptr<PredicateAdapter> vertex_cover_adapter(SimpleGraph g);

/// Exhaustive search for a consistent cut with exactly k events (counted via
/// state_counts) at which every local predicate holds. Returns the
/// lexicographically first such cut.
DetectionOutcome level_k_conjunctive_detect(const Computation& c, std::int64_t k,
                                            std::uint64_t budget = kDefaultIdealBudget);

}  // namespace latdet
