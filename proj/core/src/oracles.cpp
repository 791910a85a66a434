#include "latdet/oracles.hpp"

#include <algorithm>
#include <bit>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <numeric>

#include "latdet/error.hpp"

namespace latdet {

OracleReport brute_force_detect(const PredicateAdapter& adapter, const ChainPoset& poset,
                                std::uint64_t budget) {
  OracleReport report;
  for_each_ideal(
      poset,
      [&](const GlobalState& g) {
        if (adapter.evaluate(g)) {
          report.satisfying_states.push_back(g);
          report.levels.insert(g.level());
        }
        return true;
      },
      budget);
  if (report.satisfying_states.empty()) return report;

  GlobalState low = report.satisfying_states.front();
  GlobalState high = low;
  for (const auto& g : report.satisfying_states) {
    low = meet(low, g);
    high = join(high, g);
  }
  const auto contains = [&](const GlobalState& g) {
    return std::binary_search(report.satisfying_states.begin(), report.satisfying_states.end(), g);
  };
  if (contains(low)) report.least = low;
  if (contains(high)) report.greatest = high;
  return report;
}

namespace {

// Kept separate from the library's union-find so the oracle shares no code
// with the adapters it checks.
struct Forest {
  std::vector<int> parent;
  explicit Forest(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int root(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  }
  bool link(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

SpanningForest kruskal_mst(const WeightedGraph& g) {
  g.validate();
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(g.edges[a].weight, a) < std::pair(g.edges[b].weight, b);
  });
  Forest forest(g.vertex_count);
  SpanningForest out;
  for (std::size_t k : order) {
    if (forest.link(g.edges[k].u, g.edges[k].v)) {
      out.edges.push_back(k);
      out.weight += g.edges[k].weight;
    }
  }
  return out;
}

std::int64_t exhaustive_min_spanning_weight(const WeightedGraph& g) {
  g.validate();
  const std::size_t m = g.edges.size();
  if (m > 24) throw OracleTooLarge("exhaustive spanning forest search: more than 24 edges");
  int components = g.vertex_count;
  {
    Forest f(g.vertex_count);
    for (const auto& e : g.edges) components -= f.link(e.u, e.v) ? 1 : 0;
  }
  const int forest_size = g.vertex_count - components;
  std::optional<std::int64_t> best;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    if (std::popcount(mask) != forest_size) continue;
    Forest f(g.vertex_count);
    std::int64_t weight = 0;
    bool acyclic = true;
    for (std::size_t k = 0; k < m && acyclic; ++k) {
      if (!((mask >> k) & 1u)) continue;
      acyclic = f.link(g.edges[k].u, g.edges[k].v);
      weight += g.edges[k].weight;
    }
    if (acyclic && (!best || weight < *best)) best = weight;
  }
  return best.value_or(0);
}

std::vector<int> gale_shapley(const MarriageInstance& inst) {
  inst.validate();
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<int> next(n, 0);
  std::vector<int> husband(n, -1);
  std::deque<std::size_t> free_men;
  for (std::size_t m = 0; m < n; ++m) free_men.push_back(m);
  while (!free_men.empty()) {
    const std::size_t m = free_men.front();
    free_men.pop_front();
    const auto w = static_cast<std::size_t>(inst.mpref[m][static_cast<std::size_t>(next[m])]);
    const int h = husband[w];
    if (h < 0) {
      husband[w] = static_cast<int>(m);
    } else if (inst.rank[w][m] < inst.rank[w][static_cast<std::size_t>(h)]) {
      husband[w] = static_cast<int>(m);
      ++next[static_cast<std::size_t>(h)];
      free_men.push_back(static_cast<std::size_t>(h));
    } else {
      ++next[m];
      free_men.push_back(m);
    }
  }
  return next;
}

bool is_stable(const MarriageInstance& inst, const std::vector<int>& wife) {
  const auto n = static_cast<std::size_t>(inst.n);
  if (wife.size() != n) return false;
  std::vector<int> husband(n, -1);
  for (std::size_t m = 0; m < n; ++m) {
    const int w = wife[m];
    if (w < 0 || w >= inst.n || husband[static_cast<std::size_t>(w)] >= 0) return false;
    husband[static_cast<std::size_t>(w)] = static_cast<int>(m);
  }
  for (std::size_t m = 0; m < n; ++m) {
    for (int w : inst.mpref[m]) {
      if (w == wife[m]) break;
      const auto uw = static_cast<std::size_t>(w);
      if (inst.rank[uw][m] < inst.rank[uw][static_cast<std::size_t>(husband[uw])]) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> all_stable_marriages(const MarriageInstance& inst) {
  inst.validate();
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<int> wife(n);
  std::iota(wife.begin(), wife.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (!is_stable(inst, wife)) continue;
    std::vector<int> choice(n);
    for (std::size_t m = 0; m < n; ++m) {
      choice[m] = static_cast<int>(
          std::find(inst.mpref[m].begin(), inst.mpref[m].end(), wife[m]) - inst.mpref[m].begin());
    }
    out.push_back(std::move(choice));
  } while (std::next_permutation(wife.begin(), wife.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> top_trading_cycles(const HousingInstance& inst) {
  inst.validate();
  const auto n = static_cast<std::size_t>(inst.n);
  std::vector<int> house(n, -1);
  std::vector<char> active(n, 1);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::vector<std::size_t> points(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (int h : inst.pref[i]) {
        if (active[static_cast<std::size_t>(h)]) {
          points[i] = static_cast<std::size_t>(h);
          break;
        }
      }
    }
    // Walking the pointer graph from any active agent ends on a cycle.
    std::size_t start = 0;
    while (!active[start]) ++start;
    std::vector<char> seen(n, 0);
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = 1;
      x = points[x];
    }
    const std::size_t cycle_start = x;
    do {
      house[x] = static_cast<int>(points[x]);
      x = points[x];
    } while (x != cycle_start);
    do {
      active[x] = 0;
      --remaining;
      x = static_cast<std::size_t>(house[x]);
    } while (x != cycle_start);
  }
  return house;
}

namespace {

bool kuhn(const std::vector<std::vector<int>>& options, int agent, std::vector<int>& owner,
          std::vector<char>& seen) {
  for (int h : options[static_cast<std::size_t>(agent)]) {
    if (seen[static_cast<std::size_t>(h)]) continue;
    seen[static_cast<std::size_t>(h)] = 1;
    int& o = owner[static_cast<std::size_t>(h)];
    if (o < 0 || kuhn(options, o, owner, seen)) {
      o = agent;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> blocking_coalition(const HousingInstance& inst,
                                                   const std::vector<int>& house) {
  inst.validate();
  const auto n = static_cast<std::size_t>(inst.n);
  if (n > 16) throw OracleTooLarge("coalition search: more than 16 agents");
  std::vector<std::vector<int>> pos(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) pos[i][static_cast<std::size_t>(inst.pref[i][k])] = static_cast<int>(k);
  }
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::vector<int>> options(n);
    std::vector<int> members;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((mask >> i) & 1u)) continue;
      members.push_back(static_cast<int>(i));
      for (std::size_t h = 0; h < n; ++h) {
        if (((mask >> h) & 1u) && pos[i][h] < pos[i][static_cast<std::size_t>(house[i])]) {
          options[i].push_back(static_cast<int>(h));
        }
      }
    }
    std::vector<int> owner(n, -1);
    bool perfect = true;
    for (int i : members) {
      std::vector<char> seen(n, 0);
      if (!kuhn(options, i, owner, seen)) {
        perfect = false;
        break;
      }
    }
    if (perfect) return members;
  }
  return std::nullopt;
}

std::vector<std::vector<bool>> floyd_warshall_closure(const Digraph& d) {
  d.validate();
  const auto n = static_cast<std::size_t>(d.vertex_count);
  std::vector<std::vector<bool>> r = d.adjacency;
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

BitMatrix worklist_closure(const BitMatrix& adjacency) {
  const std::size_t n = adjacency.size();
  BitMatrix out(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    out.set(s, s);
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        if (adjacency.test(x, y) && !out.test(s, y)) {
          out.set(s, y);
          queue.push_back(y);
        }
      }
    }
  }
  return out;
}

bool subset_sum_dp(const std::vector<std::int64_t>& x, std::int64_t k) {
  if (k < 0) return false;
  std::vector<char> reachable(static_cast<std::size_t>(k) + 1, 0);
  reachable[0] = 1;
  for (std::int64_t v : x) {
    if (v < 0) throw InvalidInput("subset sum: negative value");
    for (std::int64_t s = k; s >= v; --s) {
      if (reachable[static_cast<std::size_t>(s - v)]) reachable[static_cast<std::size_t>(s)] = 1;
    }
  }
  return reachable[static_cast<std::size_t>(k)];
}

Computation build_subset_sum_computation(const std::vector<std::int64_t>& x) {
  Computation c;
  if (x.empty()) {
    c.clocks = {{}};
    c.local_predicate = {{true}};
    c.state_counts = {{0}};
    return c;
  }
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0) throw InvalidInput("subset sum: values must be positive");
    std::vector<int> vc(n, 0);
    vc[i] = 1;
    c.clocks.push_back({std::move(vc)});
    c.local_predicate.push_back({true, true});
    c.state_counts.push_back({0, x[i]});
  }
  return c;
}

int max_matching(const BipartiteInstance& inst) {
  inst.validate();
  std::vector<std::vector<int>> options(static_cast<std::size_t>(inst.left_count));
  for (const auto& [l, r] : inst.edges) options[static_cast<std::size_t>(l)].push_back(r);
  std::vector<int> owner(static_cast<std::size_t>(inst.right_count), -1);
  int size = 0;
  for (int l = 0; l < inst.left_count; ++l) {
    std::vector<char> seen(static_cast<std::size_t>(inst.right_count), 0);
    if (kuhn(options, l, owner, seen)) ++size;
  }
  return size;
}

int rational_rank(const VectorSet& s) {
  s.validate();
  using boost::multiprecision::cpp_rational;
  std::vector<std::vector<cpp_rational>> m;
  for (const auto& v : s.vectors) m.emplace_back(v.begin(), v.end());
  int rank = 0;
  const auto cols = static_cast<std::size_t>(s.dimension);
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < m.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(rank)]);
    const auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
      const cpp_rational factor = m[r][c] / p[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * p[k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace latdet
