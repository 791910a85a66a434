#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latdet/lattice.hpp"

namespace latdet {

/// Sorted, duplicate-free set of chain indices.
using IndexSet = std::vector<std::size_t>;

/// One local state: `position` events taken on `chain`.
struct LocalState {
  std::size_t chain = 0;
  int position = 0;
  friend bool operator==(const LocalState&, const LocalState&) = default;
};

/// rejects(from, to): once every state up to `from` is eliminated, every
/// state up to `to` is eliminated as well. `seeds` are the local states
/// forbidden before any advancement. The node set is every local state of
/// a poset with the given chain heights.
struct RejectionGraph {
  std::vector<int> heights;
  std::vector<std::pair<LocalState, LocalState>> edges;
  std::vector<LocalState> seeds;
};

enum class Status { Found, NotFound };

struct DetectionOutcome {
  Status status = Status::NotFound;
  std::optional<GlobalState> state;
  /// Bulk-synchronous supersteps executed (matrix squarings for the
  /// rejection engine).
  std::size_t rounds = 0;
  /// Total single-chain advances (or retreats) applied.
  std::size_t advancements = 0;

  bool found() const noexcept { return status == Status::Found; }

  static DetectionOutcome found_at(GlobalState g, std::size_t rounds, std::size_t advancements) {
    return {Status::Found, std::move(g), rounds, advancements};
  }
  static DetectionOutcome not_found(std::size_t rounds, std::size_t advancements) {
    return {Status::NotFound, std::nullopt, rounds, advancements};
  }
};

enum class Hook : unsigned {
  None = 0,
  Helpful = 1u << 0,
  Independent = 1u << 1,
  Forbidden = 1u << 2,
  DualForbidden = 1u << 3,
  Rejection = 1u << 4,
};

constexpr Hook operator|(Hook a, Hook b) {
  return static_cast<Hook>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_hook(Hook set, Hook h) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(h)) != 0;
}

/// A problem instance seen as a predicate B over the ideals of a poset.
///
/// Hooks other than evaluate() are optional and advertised by hooks().
/// Every const hook must be a pure function of its arguments: engines call
/// forbidden() and dual_forbidden() for distinct chains concurrently.
/// commit() is the single mutation point; engines call it with the current
/// state between supersteps so an adapter can keep incremental structures
/// (a union-find, the current matching) for that state.
class PredicateAdapter {
 public:
  virtual ~PredicateAdapter() = default;

  virtual std::string_view name() const = 0;
  virtual const ChainPoset& poset() const = 0;
  virtual Hook hooks() const = 0;

  virtual bool evaluate(const GlobalState& g) const = 0;

  /// Chains on which advancing keeps some satisfying state reachable.
  virtual IndexSet helpful_set(const GlobalState& g) const;
  /// Chains that may all be advanced together without losing every
  /// satisfying state above g.
  virtual IndexSet independent_set(const GlobalState& g) const;
  /// No H >= g with H[i] = g[i] satisfies B.
  virtual bool forbidden(std::size_t i, const GlobalState& g) const;
  /// No H <= g with H[i] = g[i] satisfies B.
  virtual bool dual_forbidden(std::size_t i, const GlobalState& g) const;
  virtual RejectionGraph rejection_graph() const;

  /// Whether hooks read only the part of the instance at or below g.
  virtual bool online() const { return true; }

  virtual void commit(const GlobalState& /*g*/) {}
};

IndexSet forbidden_set(const PredicateAdapter& adapter, const GlobalState& g, unsigned workers = 0);
IndexSet dual_forbidden_set(const PredicateAdapter& adapter, const GlobalState& g,
                            unsigned workers = 0);

}  // namespace latdet
