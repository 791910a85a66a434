#include "latdet/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "latdet/error.hpp"

namespace latdet {

std::int64_t GlobalState::level() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

bool GlobalState::precedes_or_equals(const GlobalState& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (counts_[i] > other.counts_[i]) return false;
  }
  return true;
}

std::string GlobalState::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out << ',';
    out << counts_[i];
  }
  out << ']';
  return out.str();
}

GlobalState meet(const GlobalState& a, const GlobalState& b) {
  if (a.size() != b.size()) throw InvalidInput("meet: dimension mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return GlobalState(std::move(out));
}

GlobalState join(const GlobalState& a, const GlobalState& b) {
  if (a.size() != b.size()) throw InvalidInput("join: dimension mismatch");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return GlobalState(std::move(out));
}

ChainPoset::ChainPoset(std::vector<int> heights, std::vector<CausalEdge> causal_edges)
    : heights_(std::move(heights)), edges_(std::move(causal_edges)) {
  if (heights_.empty()) throw InvalidInput("poset needs at least one chain");
  for (int h : heights_) {
    if (h < 0) throw InvalidInput("chain height must be non-negative");
  }
  const auto in_range = [&](const EventRef& e) {
    return e.chain < heights_.size() && e.index >= 1 && e.index <= heights_[e.chain];
  };
  for (const auto& edge : edges_) {
    if (!in_range(edge.before) || !in_range(edge.after)) {
      throw InvalidInput("causal edge refers to a nonexistent event");
    }
  }
  if (edges_.empty()) return;

  const std::size_t n = heights_.size();
  event_offset_.resize(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    event_offset_[i + 1] = event_offset_[i] + static_cast<std::size_t>(heights_[i]);
  }
  const std::size_t events = event_offset_[n];
  const auto id = [&](const EventRef& e) {
    return event_offset_[e.chain] + static_cast<std::size_t>(e.index - 1);
  };

  std::vector<std::vector<std::size_t>> successors(events);
  std::vector<std::size_t> indegree(events, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 1; a < heights_[i]; ++a) {
      successors[id({i, a})].push_back(id({i, a + 1}));
      ++indegree[id({i, a + 1})];
    }
  }
  for (const auto& edge : edges_) {
    successors[id(edge.before)].push_back(id(edge.after));
    ++indegree[id(edge.after)];
  }

  clocks_.assign(events * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int a = 1; a <= heights_[i]; ++a) clocks_[id({i, a}) * n + i] = a;
  }

  std::queue<std::size_t> ready;
  for (std::size_t e = 0; e < events; ++e) {
    if (indegree[e] == 0) ready.push(e);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t e = ready.front();
    ready.pop();
    ++visited;
    for (std::size_t s : successors[e]) {
      for (std::size_t c = 0; c < n; ++c) {
        clocks_[s * n + c] = std::max(clocks_[s * n + c], clocks_[e * n + c]);
      }
      if (--indegree[s] == 0) ready.push(s);
    }
  }
  if (visited != events) throw InvalidInput("causal edges contain a cycle");
}

ChainPoset ChainPoset::boolean(std::size_t n) { return ChainPoset(std::vector<int>(n, 1)); }

std::span<const int> ChainPoset::clock(std::size_t chain, int index) const {
  if (clocks_.empty()) throw InvalidInput("clock requested on a product poset");
  if (chain >= chains() || index < 1 || index > heights_[chain]) {
    throw InvalidInput("clock requested for a nonexistent event");
  }
  const std::size_t n = chains();
  const std::size_t e = event_offset_[chain] + static_cast<std::size_t>(index - 1);
  return std::span<const int>(clocks_).subspan(e * n, n);
}

std::int64_t ChainPoset::top_level() const noexcept {
  return std::accumulate(heights_.begin(), heights_.end(), std::int64_t{0});
}

std::uint64_t ChainPoset::product_size() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t size = 1;
  for (int h : heights_) {
    const auto factor = static_cast<std::uint64_t>(h) + 1;
    if (size > kMax / factor) return kMax;
    size *= factor;
  }
  return size;
}

namespace {

void check_fits(const ChainPoset& p, const GlobalState& g) {
  if (g.size() != p.chains()) throw InvalidInput("global state dimension does not match poset");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 0 || g[i] > p.height(i)) throw InvalidInput("global state component out of range");
  }
}

bool downward_closed(const ChainPoset& p, const GlobalState& g) {
  if (p.is_product()) return true;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j] == 0) continue;
    const auto clock = p.clock(j, g[j]);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (clock[i] > g[i]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_ideal(const ChainPoset& p, const GlobalState& g) {
  check_fits(p, g);
  return downward_closed(p, g);
}

GlobalState advance(const ChainPoset& p, const GlobalState& g, std::size_t idx) {
  check_fits(p, g);
  if (idx >= p.chains()) throw InvalidInput("advance: chain index out of range");
  if (g[idx] >= p.height(idx)) {
    throw AtTop("chain " + std::to_string(idx) + " cannot be advanced past its top");
  }
  GlobalState next = g;
  ++next[idx];
  return next;
}

void for_each_ideal(const ChainPoset& p, const std::function<bool(const GlobalState&)>& visit,
                    std::uint64_t budget) {
  if (p.product_size() > budget) {
    throw OracleTooLarge("lattice has " + std::to_string(p.product_size()) +
                         " candidate states, budget is " + std::to_string(budget));
  }
  const std::size_t n = p.chains();
  GlobalState g = p.bottom();
  while (true) {
    if (downward_closed(p, g) && !visit(g)) return;
    // Odometer with the last chain varying fastest gives lexicographic order.
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (g[i] < p.height(i)) {
        ++g[i];
        break;
      }
      g[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

std::vector<GlobalState> enumerate_ideals(const ChainPoset& p, std::uint64_t budget) {
  std::vector<GlobalState> out;
  for_each_ideal(
      p,
      [&](const GlobalState& g) {
        out.push_back(g);
        return true;
      },
      budget);
  return out;
}

}  // namespace latdet
