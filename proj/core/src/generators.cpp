#include "latdet/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "latdet/error.hpp"

namespace latdet {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidInput("rng: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling keeps the draw unbiased and platform independent.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - 
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<std::int64_t>(x % span);
}

bool Rng::coin(double p_true) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return u < p_true;
}

std::vector<int> Rng::permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(p.begin(), p.end(), 0);
  shuffle(p);
  return p;
}

namespace {

void require_size(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput(what);
}

}  // namespace

BipartiteInstance random_bipartite(int left, int right, double density, std::uint64_t seed) {
  require_size(left >= 0 && right >= 0, "gen bipartite: negative size");
  require_probability(density, "gen bipartite: density must be in [0, 1]");
  Rng rng(seed);
  BipartiteInstance inst{left, right, {}};
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      if (rng.coin(density)) inst.edges.emplace_back(l, r);
    }
  }
  return inst;
}

WeightedGraph random_connected_graph(int vertices, double extra_density, bool unique,
                                     std::uint64_t seed) {
  require_size(vertices >= 1 && vertices <= 4096, "gen graph: vertices must be in [1, 4096]");
  require_probability(extra_density, "gen graph: density must be in [0, 1]");
  Rng rng(seed);
  WeightedGraph g;
  g.vertex_count = vertices;
  g.unique_weights = unique;
  std::vector<std::vector<char>> present(static_cast<std::size_t>(vertices),
                                         std::vector<char>(static_cast<std::size_t>(vertices), 0));
  const std::vector<int> order = rng.permutation(vertices);
  for (int k = 1; k < vertices; ++k) {
    const int u = order[static_cast<std::size_t>(k)];
    const int v = order[static_cast<std::size_t>(rng.uniform(0, k - 1))];
    g.edges.push_back({std::min(u, v), std::max(u, v), 0});
    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] &&
          rng.coin(extra_density)) {
        g.edges.push_back({u, v, 0});
      }
    }
  }
  rng.shuffle(g.edges);
  const auto m = static_cast<std::int64_t>(g.edges.size());
  if (unique) {
    const std::vector<int> w = rng.permutation(static_cast<int>(m));
    for (std::size_t k = 0; k < g.edges.size(); ++k) g.edges[k].weight = w[k] + 1;
  } else {
    for (auto& e : g.edges) e.weight = rng.uniform(1, std::max<std::int64_t>(1, m / 2));
  }
  return g;
}

VectorSet random_vectors(int count, int dimension, int max_abs, std::uint64_t seed) {
  require_size(count >= 0 && dimension >= 0 && max_abs >= 0, "gen vectors: negative size");
  Rng rng(seed);
  VectorSet s;
  s.dimension = dimension;
  for (int k = 0; k < count; ++k) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(dimension));
    // Biasing toward zero produces dependent sets often enough to matter.
    for (auto& x : v) x = rng.coin(0.4) ? 0 : rng.uniform(-max_abs, max_abs);
    s.vectors.push_back(std::move(v));
  }
  return s;
}

MarriageInstance random_marriage(int n, std::uint64_t seed) {
  require_size(n >= 1 && n <= 64, "gen marriage: n must be in [1, 64]");
  Rng rng(seed);
  MarriageInstance inst;
  inst.n = n;
  for (int m = 0; m < n; ++m) inst.mpref.push_back(rng.permutation(n));
  for (int w = 0; w < n; ++w) inst.rank.push_back(rng.permutation(n));
  return inst;
}

HousingInstance random_housing(int n, std::uint64_t seed) {
  require_size(n >= 1 && n <= 64, "gen housing: n must be in [1, 64]");
  Rng rng(seed);
  HousingInstance inst;
  inst.n = n;
  for (int i = 0; i < n; ++i) inst.pref.push_back(rng.permutation(n));
  return inst;
}

Computation random_computation(int processes, int max_events, double message_density,
                               double truth_density, std::uint64_t seed) {
  require_size(processes >= 1 && processes <= 64, "gen computation: processes must be in [1, 64]");
  require_size(max_events >= 0 && max_events <= 64, "gen computation: events must be in [0, 64]");
  require_probability(message_density, "gen computation: message density must be in [0, 1]");
  require_probability(truth_density, "gen computation: truth density must be in [0, 1]");
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(processes);
  std::vector<int> planned(n);
  for (auto& e : planned) e = static_cast<int>(rng.uniform(0, max_events));

  Computation c;
  c.clocks.resize(n);
  // Simulate a run: execute events in a random interleaving; a receive
  // merges the clock of an already executed event elsewhere.
  std::vector<std::vector<int>> current(n, std::vector<int>(n, 0));
  std::vector<std::pair<std::size_t, int>> executed;
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < n; ++i) {
    for (int e = 0; e < planned[i]; ++e) pending.push_back(i);
  }
  rng.shuffle(pending);
  for (std::size_t i : pending) {
    std::vector<int> vc = current[i];
    ++vc[i];
    if (!c.clocks[i].empty() && rng.coin(message_density)) {
      std::vector<std::size_t> senders;
      for (std::size_t k = 0; k < executed.size(); ++k) {
        if (executed[k].first != i) senders.push_back(k);
      }
      if (!senders.empty()) {
        const auto [pj, ej] =
            executed[senders[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(senders.size()) - 1))]];
        const auto& sent = c.clocks[pj][static_cast<std::size_t>(ej)];
        for (std::size_t k = 0; k < n; ++k) vc[k] = std::max(vc[k], sent[k]);
      }
    }
    current[i] = vc;
    executed.emplace_back(i, static_cast<int>(c.clocks[i].size()));
    c.clocks[i].push_back(std::move(vc));
  }
  c.local_predicate.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s <= planned[i]; ++s) c.local_predicate[i].push_back(rng.coin(truth_density));
  }
  return c;
}

Digraph random_digraph(int vertices, double density, std::uint64_t seed) {
  require_size(vertices >= 1 && vertices <= 256, "gen digraph: vertices must be in [1, 256]");
  require_probability(density, "gen digraph: density must be in [0, 1]");
  Rng rng(seed);
  Digraph d;
  d.vertex_count = vertices;
  d.adjacency.assign(static_cast<std::size_t>(vertices),
                     std::vector<bool>(static_cast<std::size_t>(vertices), false));
  for (int i = 0; i < vertices; ++i) {
    for (int j = 0; j < vertices; ++j) {
      if (i != j && rng.coin(density)) {
        d.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
      }
    }
  }
  d.source = static_cast<int>(rng.uniform(0, vertices - 1));
  return d;
}

SimpleGraph random_simple_graph(int vertices, double density, std::uint64_t seed) {
  require_size(vertices >= 0 && vertices <= 24, "gen simple graph: vertices must be in [0, 24]");
  require_probability(density, "gen simple graph: density must be in [0, 1]");
  Rng rng(seed);
  SimpleGraph g;
  g.vertex_count = vertices;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) {
      if (rng.coin(density)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

std::vector<std::int64_t> random_subset_list(int max_len, std::int64_t max_value,
                                             std::uint64_t seed) {
  require_size(max_len >= 0 && max_value >= 1, "gen subset list: invalid bounds");
  Rng rng(seed);
  std::vector<std::int64_t> x(static_cast<std::size_t>(rng.uniform(0, max_len)));
  for (auto& v : x) v = rng.uniform(1, max_value);
  return x;
}

}  // namespace latdet
