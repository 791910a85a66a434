#include <algorithm>
#include <bit>
#include <deque>
#include <optional>
#include <string>

#include "detail/union_find.hpp"
#include "latdet/error.hpp"
#include "latdet/problems.hpp"

namespace latdet {

namespace {

using detail::UnionFind;

bool chosen(const GlobalState& g, std::size_t i) { return g[i] != 0; }

IndexSet unchosen(const GlobalState& g) {
  IndexSet out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!chosen(g, i)) out.push_back(i);
  }
  return out;
}

// One single-event chain per element; an empty ground set becomes a single
// chain with no events so the lattice is just the bottom.
ChainPoset boolean_poset(std::size_t n) {
  return n == 0 ? ChainPoset(std::vector<int>{0}) : ChainPoset::boolean(n);
}

void check_boolean_state(const ChainPoset& poset, const GlobalState& g) {
  if (g.size() != poset.chains()) throw InvalidInput("state dimension does not match instance");
}

// ---------------------------------------------------------------------------
// Bipartite matching

class MatchingAdapter final : public PredicateAdapter {
 public:
  explicit MatchingAdapter(BipartiteInstance inst)
      : inst_(std::move(inst)),
        poset_(boolean_poset(static_cast<std::size_t>(inst_.left_count))),
        adjacency_(static_cast<std::size_t>(inst_.left_count)) {
    inst_.validate();
    for (const auto& [l, r] : inst_.edges) adjacency_[static_cast<std::size_t>(l)].push_back(r);
    for (auto& row : adjacency_) std::sort(row.begin(), row.end());
    committed_ = build(poset_.bottom());
  }

  std::string_view name() const override { return "matching"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Helpful; }

  bool evaluate(const GlobalState& g) const override {
    const Matching m = matching_for(g);
    return m.saturated && augmentable(m, g).empty();
  }

  IndexSet helpful_set(const GlobalState& g) const override {
    const Matching m = matching_for(g);
    // Supersets of an unmatchable set are unmatchable: every index is
    // vacuously helpful.
    if (!m.saturated) return unchosen(g);
    return augmentable(m, g);
  }

  void commit(const GlobalState& g) override {
    const auto& prev = committed_.state;
    if (prev.size() == g.size() && prev.precedes_or_equals(g) && g.level() == prev.level() + 1 &&
        committed_.saturated) {
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != prev[i]) {
          std::vector<char> seen(static_cast<std::size_t>(inst_.right_count), 0);
          committed_.saturated = augment(committed_, static_cast<int>(i), seen);
        }
      }
      committed_.state = g;
      return;
    }
    committed_ = build(g);
  }

 private:
  struct Matching {
    GlobalState state;
    std::vector<int> partner_of_right;
    bool saturated = true;
  };

  bool augment(Matching& m, int left, std::vector<char>& seen) const {
    for (int r : adjacency_[static_cast<std::size_t>(left)]) {
      auto& mark = seen[static_cast<std::size_t>(r)];
      if (mark) continue;
      mark = 1;
      int& owner = m.partner_of_right[static_cast<std::size_t>(r)];
      if (owner < 0 || augment(m, owner, seen)) {
        owner = left;
        return true;
      }
    }
    return false;
  }

  Matching build(const GlobalState& g) const {
    if (g.size() != static_cast<std::size_t>(inst_.left_count) && inst_.left_count > 0) {
      throw InvalidInput("matching: state dimension does not match left side");
    }
    Matching m{g, std::vector<int>(static_cast<std::size_t>(inst_.right_count), -1), true};
    for (int l = 0; l < inst_.left_count; ++l) {
      if (!chosen(g, static_cast<std::size_t>(l))) continue;
      std::vector<char> seen(static_cast<std::size_t>(inst_.right_count), 0);
      if (!augment(m, l, seen)) m.saturated = false;
    }
    return m;
  }

  Matching matching_for(const GlobalState& g) const {
    check_boolean_state(poset_, g);
    if (g == committed_.state) return committed_;
    return build(g);
  }

  // Unchosen left vertices with an alternating path to a free right vertex.
  IndexSet augmentable(const Matching& m, const GlobalState& g) const {
    IndexSet out;
    for (int l = 0; l < inst_.left_count; ++l) {
      if (chosen(g, static_cast<std::size_t>(l))) continue;
      Matching trial = m;
      std::vector<char> seen(static_cast<std::size_t>(inst_.right_count), 0);
      if (augment(trial, l, seen)) out.push_back(static_cast<std::size_t>(l));
    }
    return out;
  }

  BipartiteInstance inst_;
  ChainPoset poset_;
  std::vector<std::vector<int>> adjacency_;
  Matching committed_;
};

// ---------------------------------------------------------------------------
// Spanning forests over weight-ordered edges

std::size_t component_count(int vertex_count, const std::vector<WeightedEdge>& edges) {
  UnionFind uf(static_cast<std::size_t>(vertex_count));
  for (const auto& e : edges) uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  return uf.sets();
}

class ForestAdapterBase : public PredicateAdapter {
 public:
  explicit ForestAdapterBase(WeightedGraph g)
      : graph_(std::move(g)), poset_(boolean_poset(graph_.edges.size())) {
    graph_.validate();
    for (std::size_t k : weight_order(graph_)) sorted_.push_back(graph_.edges[k]);
    forest_size_ = static_cast<std::size_t>(graph_.vertex_count) -
                   component_count(graph_.vertex_count, graph_.edges);
    committed_ = build(poset_.bottom());
  }

  const ChainPoset& poset() const override { return poset_; }

  /// Acyclic with |V| - #components edges.
  bool evaluate(const GlobalState& g) const override {
    const Forest f = forest_for(g);
    return f.acyclic && f.edges == forest_size_;
  }

  void commit(const GlobalState& g) override {
    const auto& prev = committed_.state;
    if (committed_.acyclic && prev.size() == g.size() && prev.precedes_or_equals(g)) {
      for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] != prev[k] && k < sorted_.size()) {
          committed_.acyclic &= committed_.uf.unite(static_cast<std::size_t>(sorted_[k].u),
                                                   static_cast<std::size_t>(sorted_[k].v));
          ++committed_.edges;
        }
      }
      committed_.state = g;
      return;
    }
    committed_ = build(g);
  }

 protected:
  struct Forest {
    GlobalState state;
    UnionFind uf;
    std::size_t edges = 0;
    bool acyclic = true;
  };

  Forest build(const GlobalState& g) const {
    check_boolean_state(poset_, g);
    Forest f{g, UnionFind(static_cast<std::size_t>(graph_.vertex_count)), 0, true};
    for (std::size_t k = 0; k < sorted_.size(); ++k) {
      if (!chosen(g, k)) continue;
      f.acyclic &= f.uf.unite(static_cast<std::size_t>(sorted_[k].u),
                              static_cast<std::size_t>(sorted_[k].v));
      ++f.edges;
    }
    return f;
  }

  Forest forest_for(const GlobalState& g) const {
    check_boolean_state(poset_, g);
    if (g == committed_.state) return committed_;
    return build(g);
  }

  IndexSet edge_chains(const GlobalState& g) const {
    IndexSet out = unchosen(g);
    out.erase(std::remove_if(out.begin(), out.end(), [&](std::size_t k) { return k >= sorted_.size(); }),
              out.end());
    return out;
  }

  WeightedGraph graph_;
  std::vector<WeightedEdge> sorted_;
  ChainPoset poset_;
  std::size_t forest_size_ = 0;
  Forest committed_;
};

class SpanningTreeAdapter final : public ForestAdapterBase {
 public:
  using ForestAdapterBase::ForestAdapterBase;

  std::string_view name() const override { return "spanning-tree"; }
  Hook hooks() const override { return Hook::Helpful; }

  IndexSet helpful_set(const GlobalState& g) const override {
    Forest f = forest_for(g);
    if (!f.acyclic) return edge_chains(g);
    IndexSet out;
    for (std::size_t k : edge_chains(g)) {
      if (f.uf.find(static_cast<std::size_t>(sorted_[k].u)) !=
          f.uf.find(static_cast<std::size_t>(sorted_[k].v))) {
        out.push_back(k);
      }
    }
    return out;
  }
};

class BoruvkaAdapter final : public ForestAdapterBase {
 public:
  explicit BoruvkaAdapter(WeightedGraph g) : ForestAdapterBase(require_unique(std::move(g))) {}

  std::string_view name() const override { return "boruvka"; }
  Hook hooks() const override { return Hook::Independent; }

  IndexSet independent_set(const GlobalState& g) const override {
    Forest f = forest_for(g);
    if (!f.acyclic) return edge_chains(g);
    // Chains are in weight order, so the first outgoing edge seen per
    // component is its lightest.
    std::vector<std::optional<std::size_t>> lightest(static_cast<std::size_t>(graph_.vertex_count));
    for (std::size_t k : edge_chains(g)) {
      const std::size_t a = f.uf.find(static_cast<std::size_t>(sorted_[k].u));
      const std::size_t b = f.uf.find(static_cast<std::size_t>(sorted_[k].v));
      if (a == b) continue;
      if (!lightest[a]) lightest[a] = k;
      if (!lightest[b]) lightest[b] = k;
    }
    IndexSet out;
    for (const auto& k : lightest) {
      if (k) out.push_back(*k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static WeightedGraph require_unique(WeightedGraph g) {
    g.unique_weights = true;
    g.validate();
    return g;
  }
};

class UniqueMstAdapter final : public PredicateAdapter {
 public:
  explicit UniqueMstAdapter(WeightedGraph g)
      : graph_(std::move(g)), poset_(boolean_poset(graph_.edges.size())) {
    graph_.unique_weights = true;
    graph_.validate();
    for (std::size_t k : weight_order(graph_)) sorted_.push_back(graph_.edges[k]);
    UnionFind lighter(static_cast<std::size_t>(graph_.vertex_count));
    for (const auto& e : sorted_) {
      bridges_lighter_.push_back(
          lighter.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v)));
    }
  }

  std::string_view name() const override { return "mst-unique"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Forbidden; }
  bool online() const override { return false; }

  // Spanning forest satisfying the cycle property: every unchosen edge is
  // the heaviest edge on the cycle it closes with lighter chosen edges.
  bool evaluate(const GlobalState& g) const override {
    check_boolean_state(poset_, g);
    UnionFind uf(static_cast<std::size_t>(graph_.vertex_count));
    for (std::size_t k = 0; k < sorted_.size(); ++k) {
      const auto u = static_cast<std::size_t>(sorted_[k].u);
      const auto v = static_cast<std::size_t>(sorted_[k].v);
      if (chosen(g, k)) {
        if (!uf.unite(u, v)) return false;
      } else if (uf.find(u) != uf.find(v)) {
        return false;
      }
    }
    return true;
  }

  bool forbidden(std::size_t k, const GlobalState& g) const override {
    return k < sorted_.size() && !chosen(g, k) && bridges_lighter_[k];
  }

 private:
  WeightedGraph graph_;
  std::vector<WeightedEdge> sorted_;
  ChainPoset poset_;
  std::vector<bool> bridges_lighter_;
};

// ---------------------------------------------------------------------------
// Reachability and closure

std::vector<std::vector<bool>> reachable_sets(const Digraph& d) {
  const auto n = static_cast<std::size_t>(d.vertex_count);
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    reach[s][s] = true;
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y = 0; y < n; ++y) {
        if (d.adjacency[x][y] && !reach[s][y]) {
          reach[s][y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return reach;
}

class ReachabilityAdapter final : public PredicateAdapter {
 public:
  explicit ReachabilityAdapter(Digraph d)
      : graph_(std::move(d)), poset_(boolean_poset(static_cast<std::size_t>(graph_.vertex_count))) {
    graph_.validate();
    reachable_ = reachable_sets(graph_)[static_cast<std::size_t>(graph_.source)];
  }

  std::string_view name() const override { return "reach"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Forbidden | Hook::Rejection; }

  // Source chosen, closed under edges, and nothing unreachable chosen.
  bool evaluate(const GlobalState& g) const override {
    check_boolean_state(poset_, g);
    const auto n = static_cast<std::size_t>(graph_.vertex_count);
    if (!chosen(g, static_cast<std::size_t>(graph_.source))) return false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!chosen(g, i)) continue;
      if (!reachable_[i]) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (graph_.adjacency[i][j] && !chosen(g, j)) return false;
      }
    }
    return true;
  }

  bool forbidden(std::size_t j, const GlobalState& g) const override {
    if (chosen(g, j)) return false;
    if (j == static_cast<std::size_t>(graph_.source)) return true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (chosen(g, i) && graph_.adjacency[i][j]) return true;
    }
    return false;
  }

  RejectionGraph rejection_graph() const override {
    const auto n = static_cast<std::size_t>(graph_.vertex_count);
    RejectionGraph r{std::vector<int>(n, 1), {}, {{static_cast<std::size_t>(graph_.source), 0}}};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (graph_.adjacency[i][j]) r.edges.push_back({{i, 0}, {j, 0}});
      }
    }
    return r;
  }

 private:
  Digraph graph_;
  ChainPoset poset_;
  std::vector<bool> reachable_;
};

class ClosureAdapter final : public PredicateAdapter {
 public:
  explicit ClosureAdapter(Digraph d)
      : graph_(std::move(d)),
        n_(static_cast<std::size_t>(graph_.vertex_count)),
        poset_(boolean_poset(n_ * n_)) {
    graph_.validate();
    reach_ = reachable_sets(graph_);
  }

  std::string_view name() const override { return "closure"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::Forbidden | Hook::Rejection; }

  bool evaluate(const GlobalState& g) const override {
    check_boolean_state(poset_, g);
    for (std::size_t c = 0; c < n_ * n_; ++c) {
      if (chosen(g, c) ? !reach_[c / n_][c % n_] : required(c, g)) return false;
    }
    return true;
  }

  bool forbidden(std::size_t c, const GlobalState& g) const override {
    return !chosen(g, c) && required(c, g);
  }

  RejectionGraph rejection_graph() const override {
    RejectionGraph r{std::vector<int>(n_ * n_, 1), {}, {}};
    for (std::size_t i = 0; i < n_; ++i) {
      r.seeds.push_back({i * n_ + i, 0});
      for (std::size_t j = 0; j < n_; ++j) {
        if (!graph_.adjacency[i][j]) continue;
        if (i != j) r.seeds.push_back({i * n_ + j, 0});
        for (std::size_t k = 0; k < n_; ++k) r.edges.push_back({{k * n_ + i, 0}, {k * n_ + j, 0}});
      }
    }
    return r;
  }

 private:
  // Cell (i,j) must be 1 given the rest of g.
  bool required(std::size_t c, const GlobalState& g) const {
    const std::size_t i = c / n_;
    const std::size_t j = c % n_;
    if (i == j || graph_.adjacency[i][j]) return true;
    for (std::size_t k = 0; k < n_; ++k) {
      if (chosen(g, i * n_ + k) && chosen(g, k * n_ + j)) return true;
    }
    return false;
  }

  Digraph graph_;
  std::size_t n_;
  ChainPoset poset_;
  std::vector<std::vector<bool>> reach_;
};

// ---------------------------------------------------------------------------
// Minimum vertex cover

class VertexCoverAdapter final : public PredicateAdapter {
 public:
  explicit VertexCoverAdapter(SimpleGraph g)
      : graph_(std::move(g)), poset_(boolean_poset(static_cast<std::size_t>(graph_.vertex_count))) {
    graph_.validate();
    if (graph_.vertex_count > 24) throw OracleTooLarge("vertex cover: more than 24 vertices");
    minimum_ = graph_.vertex_count;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << graph_.vertex_count); ++mask) {
      if (covers(mask)) minimum_ = std::min(minimum_, std::popcount(mask));
    }
  }

  std::string_view name() const override { return "vertex-cover"; }
  const ChainPoset& poset() const override { return poset_; }
  Hook hooks() const override { return Hook::None; }
  bool online() const override { return false; }

  bool evaluate(const GlobalState& g) const override {
    check_boolean_state(poset_, g);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (chosen(g, i)) mask |= std::uint32_t{1} << i;
    }
    return covers(mask) && std::popcount(mask) == minimum_;
  }

 private:
  bool covers(std::uint32_t mask) const {
    return std::all_of(graph_.edges.begin(), graph_.edges.end(), [&](const auto& e) {
      return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u);
    });
  }

  SimpleGraph graph_;
  ChainPoset poset_;
  int minimum_ = 0;
};

}  // namespace

std::unique_ptr<PredicateAdapter> matching_adapter(BipartiteInstance inst) {
  return std::make_unique<MatchingAdapter>(std::move(inst));
}
std::unique_ptr<PredicateAdapter> spanning_tree_adapter(WeightedGraph g) {
  return std::make_unique<SpanningTreeAdapter>(std::move(g));
}
std::unique_ptr<PredicateAdapter> boruvka_adapter(WeightedGraph g) {
  return std::make_unique<BoruvkaAdapter>(std::move(g));
}
std::unique_ptr<PredicateAdapter> mst_unique_adapter(WeightedGraph g) {
  return std::make_unique<UniqueMstAdapter>(std::move(g));
}
std::unique_ptr<PredicateAdapter> reachability_adapter(Digraph d) {
  return std::make_unique<ReachabilityAdapter>(std::move(d));
}
std::unique_ptr<PredicateAdapter> closure_adapter(Digraph d) {
  return std::make_unique<ClosureAdapter>(std::move(d));
}
std::unique_ptr<PredicateAdapter> vertex_cover_adapter(SimpleGraph g) {
  return std::make_unique<VertexCoverAdapter>(std::move(g));
}

}  // namespace latdet
