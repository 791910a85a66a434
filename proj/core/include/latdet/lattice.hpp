#pragma once

// Posets of chains and the distributive lattice of their ideals.
//
// Chain i holds local states 0..height(i); state j is reached after the
// j-th event of the chain has executed. Events are addressed 1-based as
// (chain, index). A GlobalState records, per chain, how many events it
// has taken; it is a lattice element when it is downward closed under the
// causal order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace latdet {

inline constexpr std::uint64_t kDefaultIdealBudget = std::uint64_t{1} << 22;

class GlobalState {
 public:
  GlobalState() = default;
  explicit GlobalState(std::vector<int> counts) : counts_(std::move(counts)) {}
  GlobalState(std::initializer_list<int> counts) : counts_(counts) {}

  static GlobalState zeros(std::size_t n) { return GlobalState(std::vector<int>(n, 0)); }

  std::size_t size() const noexcept { return counts_.size(); }
  int operator[](std::size_t i) const { return counts_[i]; }
  int& operator[](std::size_t i) { return counts_[i]; }

  std::span<const int> counts() const noexcept { return counts_; }
  const std::vector<int>& vector() const noexcept { return counts_; }
  auto begin() const noexcept { return counts_.begin(); }
  auto end() const noexcept { return counts_.end(); }

  /// Cardinality of the ideal: the total number of events taken.
  std::int64_t level() const noexcept;

  /// Componentwise order; the lattice order on ideals.
  bool precedes_or_equals(const GlobalState& other) const;

  friend bool operator==(const GlobalState&, const GlobalState&) = default;
  // Lexicographic; used only for deterministic ordering of reports.
  friend auto operator<=>(const GlobalState& a, const GlobalState& b) {
    return a.counts_ <=> b.counts_;
  }

  std::string to_string() const;

 private:
  std::vector<int> counts_;
};

GlobalState meet(const GlobalState& a, const GlobalState& b);
GlobalState join(const GlobalState& a, const GlobalState& b);

/// Event `index` (1-based) on chain `chain`.
struct EventRef {
  std::size_t chain = 0;
  int index = 1;
  friend bool operator==(const EventRef&, const EventRef&) = default;
};

/// `before` happened-before `after`.
struct CausalEdge {
  EventRef before;
  EventRef after;
  friend bool operator==(const CausalEdge&, const CausalEdge&) = default;
};

class ChainPoset {
 public:
  /// Throws InvalidInput on negative heights, out-of-range events, or a
  /// causal cycle.
  explicit ChainPoset(std::vector<int> heights, std::vector<CausalEdge> causal_edges = {});

  /// n independent chains of one event each.
  static ChainPoset boolean(std::size_t n);

  std::size_t chains() const noexcept { return heights_.size(); }
  int height(std::size_t i) const { return heights_[i]; }
  std::span<const int> heights() const noexcept { return heights_; }
  std::span<const CausalEdge> causal_edges() const noexcept { return edges_; }
  bool is_product() const noexcept { return edges_.empty(); }

  /// Least ideal containing the event: its vector clock.
  /// Only available when the poset has causal edges.
  std::span<const int> clock(std::size_t chain, int index) const;

  GlobalState bottom() const { return GlobalState::zeros(chains()); }
  GlobalState top() const { return GlobalState(heights_); }
  std::int64_t top_level() const noexcept;

  /// Number of vectors in the product of chains, saturating at UINT64_MAX.
  std::uint64_t product_size() const noexcept;

 private:
  std::vector<int> heights_;
  std::vector<CausalEdge> edges_;
  std::vector<std::size_t> event_offset_;
  std::vector<int> clocks_;
};

/// True iff `g` is downward closed. Throws InvalidInput if `g` does not fit `p`.
bool is_ideal(const ChainPoset& p, const GlobalState& g);

/// `g` with chain `idx` advanced by one event. The result is not re-checked
/// for the ideal property. Throws AtTop when the chain is exhausted.
GlobalState advance(const ChainPoset& p, const GlobalState& g, std::size_t idx);

/// Visit every ideal exactly once in lexicographic order. The visitor returns
/// false to stop early. Throws OracleTooLarge when the product of chain
/// lengths exceeds `budget`.
void for_each_ideal(const ChainPoset& p, const std::function<bool(const GlobalState&)>& visit,
                    std::uint64_t budget = kDefaultIdealBudget);

std::vector<GlobalState> enumerate_ideals(const ChainPoset& p,
                                          std::uint64_t budget = kDefaultIdealBudget);

}  // namespace latdet
