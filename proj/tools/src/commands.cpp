#include "latdet_cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "latdet/engines.hpp"
#include "latdet/error.hpp"
#include "latdet/generators.hpp"
#include "latdet/oracles.hpp"
#include "latdet/problems.hpp"

namespace latdet::cli {

using nlohmann::json;

namespace {

// Test fixture: the predicate holds on every state, so every engine stops
// at its starting point.
class FaultyAdapter final : public PredicateAdapter {
 public:
  explicit FaultyAdapter(std::unique_ptr<PredicateAdapter> inner) : inner_(std::move(inner)) {}

  std::string_view name() const override { return inner_->name(); }
  const ChainPoset& poset() const override { return inner_->poset(); }
  Hook hooks() const override { return inner_->hooks(); }
  bool evaluate(const GlobalState&) const override { return true; }
  IndexSet helpful_set(const GlobalState& g) const override { return inner_->helpful_set(g); }
  IndexSet independent_set(const GlobalState& g) const override { return inner_->independent_set(g); }
  bool forbidden(std::size_t i, const GlobalState& g) const override { return inner_->forbidden(i, g); }
  bool dual_forbidden(std::size_t i, const GlobalState& g) const override {
    return inner_->dual_forbidden(i, g);
  }
  RejectionGraph rejection_graph() const override { return inner_->rejection_graph(); }
  bool online() const override { return inner_->online(); }
  void commit(const GlobalState& g) override { inner_->commit(g); }

 private:
  std::unique_ptr<PredicateAdapter> inner_;
};

bool distinct_weights(const WeightedGraph& g) {
  std::set<std::int64_t> seen;
  for (const auto& e : g.edges) {
    if (!seen.insert(e.weight).second) return false;
  }
  return true;
}

bool has_adapter_lattice(Kind kind) { return kind != Kind::LevelK && kind != Kind::SubsetSum; }

const Computation& computation_of(const ProblemFile& file, Computation& storage) {
  if (file.kind == Kind::SubsetSum) {
    storage = build_subset_sum_computation(std::get<SubsetSumInstance>(file.payload).values);
    return storage;
  }
  return std::get<Computation>(file.payload);
}

std::unique_ptr<PredicateAdapter> make_adapter(const ProblemFile& file, const std::string& engine) {
  switch (file.kind) {
    case Kind::Matching:
      return matching_adapter(std::get<BipartiteInstance>(file.payload));
    case Kind::Mst: {
      const auto& g = std::get<WeightedGraph>(file.payload);
      if (engine == "boruvka" || engine == "independent") return boruvka_adapter(g);
      // Exhaustive search only finds an MST when the predicate pins one down.
      if (engine == "llp" || (engine == "brute-force" && distinct_weights(g))) {
        return mst_unique_adapter(g);
      }
      return spanning_tree_adapter(g);
    }
    case Kind::Basis:
      return basis_adapter(std::get<VectorSet>(file.payload));
    case Kind::Marriage:
      return stable_marriage_adapter(std::get<MarriageInstance>(file.payload));
    case Kind::Housing:
      return housing_adapter(std::get<HousingInstance>(file.payload));
    case Kind::Conjunctive:
      return conjunctive_adapter(std::get<Computation>(file.payload));
    case Kind::Reach:
      return reachability_adapter(std::get<Digraph>(file.payload));
    case Kind::Closure:
      return closure_adapter(std::get<Digraph>(file.payload));
    case Kind::LevelK:
    case Kind::SubsetSum:
      break;
  }
  throw InvalidInput("kind '" + std::string(kind_name(file.kind)) + "' has no predicate adapter");
}

/// Least satisfying state when there is one, else the lexicographically
/// first satisfying state.
DetectionOutcome brute_force_outcome(const PredicateAdapter& adapter, std::uint64_t budget) {
  const OracleReport report = brute_force_detect(adapter, adapter.poset(), budget);
  if (!report.satisfiable()) return DetectionOutcome::not_found(0, 0);
  GlobalState g = report.least.value_or(report.satisfying_states.front());
  const auto level = static_cast<std::size_t>(g.level());
  return DetectionOutcome::found_at(std::move(g), 0, level);
}

DetectionOutcome run_engine(const std::string& engine, PredicateAdapter& adapter,
                            const RunOptions& options) {
  const EngineOptions eo{options.workers};
  const ChainPoset& poset = adapter.poset();
  if (engine == "helpful") return detect_helpful(adapter, poset, eo);
  if (engine == "boruvka" || engine == "independent") {
    return detect_independently_helpful(adapter, poset, eo);
  }
  if (engine == "llp") return detect_llp(adapter, poset, eo);
  if (engine == "bidirectional") return detect_bidirectional(adapter, poset, eo);
  if (engine == "rejection") return detect_by_rejection(adapter, poset, eo);
  if (engine == "brute-force") return brute_force_outcome(adapter, options.budget_ideals);
  throw InvalidInput("unknown engine '" + engine + "'");
}

json state_json(const GlobalState& g, int offset) {
  json out = json::array();
  for (int x : g) out.push_back(x + offset);
  return out;
}

std::vector<int> chosen_indices(const GlobalState& g) {
  std::vector<int> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 1) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<bool> mst_input_bits(const WeightedGraph& g, const GlobalState& state) {
  const auto order = weight_order(g);
  std::vector<bool> bits(g.edges.size(), false);
  for (std::size_t k = 0; k < order.size(); ++k) bits[order[k]] = state[k] == 1;
  return bits;
}

json extra_for(const ProblemFile& file, const GlobalState& g) {
  json extra = json::object();
  switch (file.kind) {
    case Kind::Matching:
      extra["matched_left"] = chosen_indices(g);
      extra["matching_size"] = g.level();
      break;
    case Kind::Mst: {
      const auto& graph = std::get<WeightedGraph>(file.payload);
      const auto bits = mst_input_bits(graph, g);
      std::vector<int> edges;
      std::int64_t weight = 0;
      for (std::size_t e = 0; e < bits.size(); ++e) {
        if (!bits[e]) continue;
        edges.push_back(static_cast<int>(e));
        weight += graph.edges[e].weight;
      }
      extra["edges"] = edges;
      extra["weight"] = weight;
      break;
    }
    case Kind::Basis:
      extra["basis"] = chosen_indices(g);
      extra["rank"] = g.level();
      break;
    case Kind::Marriage: {
      const auto& inst = std::get<MarriageInstance>(file.payload);
      json wife = json::array();
      for (std::size_t m = 0; m < g.size(); ++m) {
        wife.push_back(inst.mpref[m][static_cast<std::size_t>(g[m])] + 1);
      }
      extra["wife"] = wife;
      break;
    }
    case Kind::Housing: {
      const auto& inst = std::get<HousingInstance>(file.payload);
      json house = json::array();
      for (std::size_t i = 0; i < g.size(); ++i) {
        house.push_back(inst.pref[i][static_cast<std::size_t>(g[i])] + 1);
      }
      extra["house"] = house;
      break;
    }
    case Kind::Conjunctive:
    case Kind::LevelK:
    case Kind::SubsetSum: {
      Computation storage;
      extra["events"] = computation_of(file, storage).level(g);
      break;
    }
    case Kind::Reach:
      extra["reachable"] = chosen_indices(g);
      break;
    case Kind::Closure: {
      const auto n = static_cast<std::size_t>(std::get<Digraph>(file.payload).vertex_count);
      json rows = json::array();
      for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(g[i * n + j]);
        rows.push_back(std::move(row));
      }
      extra["closure"] = rows;
      break;
    }
  }
  return extra;
}

bool one_based(Kind kind) { return kind == Kind::Marriage || kind == Kind::Housing; }

json result_document(const ProblemFile& file, const std::string& engine,
                     const DetectionOutcome& outcome) {
  json doc;
  doc["kind"] = std::string(kind_name(file.kind));
  doc["engine"] = engine;
  doc["found"] = outcome.found();
  doc["rounds"] = outcome.rounds;
  doc["advancements"] = outcome.advancements;
  doc["indexing"] = one_based(file.kind) ? "1-based" : "0-based";
  if (outcome.found()) {
    doc["state"] = state_json(*outcome.state, one_based(file.kind) ? 1 : 0);
    doc["level"] = outcome.state->level();
    doc["extra"] = extra_for(file, *outcome.state);
  } else {
    doc["state"] = nullptr;
    doc["level"] = nullptr;
    doc["extra"] = json::object();
  }
  return doc;
}

json run_parallel_mst(const ProblemFile& file, const RunOptions& options) {
  const auto& g = std::get<WeightedGraph>(file.payload);
  std::vector<WeightedEdge> sorted;
  for (auto e : weight_order(g)) sorted.push_back(g.edges[e]);
  EdgeSelection sel = detect_parallel_mst_unique(sorted, g.vertex_count, EngineOptions{options.workers});
  if (options.inject_fault) std::fill(sel.selected.begin(), sel.selected.end(), true);
  std::vector<int> counts;
  for (bool b : sel.selected) counts.push_back(b ? 1 : 0);
  GlobalState state(std::move(counts));
  const auto level = static_cast<std::size_t>(state.level());
  return result_document(file, "parallel-mst", DetectionOutcome::found_at(std::move(state), sel.rounds, level));
}

json run_level_k(const ProblemFile& file, const RunOptions& options) {
  if (!options.k) throw InvalidInput("engine 'levelk' requires --k");
  Computation storage;
  const Computation& c = computation_of(file, storage);
  DetectionOutcome outcome = level_k_conjunctive_detect(c, *options.k, options.budget_ideals);
  if (options.inject_fault) {
    outcome = outcome.found() ? DetectionOutcome::not_found(0, 0)
                              : DetectionOutcome::found_at(c.poset().bottom(), 0, 0);
  }
  json doc = result_document(file, "levelk", outcome);
  doc["extra"]["k"] = *options.k;
  return doc;
}

void write_document(const json& doc, const std::optional<std::string>& output, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (!output) {
    out << text;
    return;
  }
  std::ofstream file(*output, std::ios::binary);
  if (!file) throw InvalidInput("cannot write '" + *output + "'");
  file << text;
}

}  // namespace

std::vector<std::string> engines_for(Kind kind) {
  switch (kind) {
    case Kind::Matching:
    case Kind::Basis:
      return {"helpful", "brute-force"};
    case Kind::Mst:
      return {"helpful", "boruvka", "parallel-mst", "llp", "brute-force"};
    case Kind::Marriage:
      return {"llp", "bidirectional", "brute-force"};
    case Kind::Housing:
      return {"llp", "brute-force"};
    case Kind::Conjunctive:
      return {"llp", "bidirectional", "rejection", "brute-force", "levelk"};
    case Kind::LevelK:
    case Kind::SubsetSum:
      return {"levelk"};
    case Kind::Reach:
    case Kind::Closure:
      return {"rejection", "llp", "brute-force"};
  }
  return {};
}

json run_detection(const ProblemFile& file, const RunOptions& options) {
  const auto engines = engines_for(file.kind);
  std::string engine = options.engine.empty() ? engines.front() : options.engine;
  if (engine == "independent") engine = "boruvka";
  if (std::find(engines.begin(), engines.end(), engine) == engines.end()) {
    throw InvalidInput("engine '" + engine + "' is not applicable to kind '" +
                       std::string(kind_name(file.kind)) + "'");
  }
  if (engine == "parallel-mst") return run_parallel_mst(file, options);
  if (engine == "levelk") return run_level_k(file, options);

  std::unique_ptr<PredicateAdapter> adapter = make_adapter(file, engine);
  if (options.inject_fault) adapter = std::make_unique<FaultyAdapter>(std::move(adapter));
  return result_document(file, engine, run_engine(engine, *adapter, options));
}

int run_command(const std::string& kind, const std::string& path, const RunOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    const Kind requested = parse_kind(kind);
    ProblemFile file = load_problem(path);
    RunOptions effective = options;
    if (requested == Kind::LevelK && file.kind != Kind::LevelK) {
      if (file.kind != Kind::Conjunctive && file.kind != Kind::SubsetSum) {
        throw InvalidInput("kind 'levelk' needs a levelk, conjunctive or subset-sum file");
      }
      if (effective.engine.empty()) effective.engine = "levelk";
    } else if (requested != file.kind) {
      throw InvalidInput("file holds kind '" + std::string(kind_name(file.kind)) +
                         "', not '" + kind + "'");
    }
    const json doc = run_detection(file, effective);
    write_document(doc, effective.output, out);
    return doc["found"].get<bool>() ? kExitFound : kExitNotFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

namespace {

struct EngineRow {
  std::string engine;
  json result;
  json checks = json::object();
  bool agree = true;

  void check(const std::string& oracle, bool ok) {
    checks[oracle] = ok;
    agree = agree && ok;
  }
};

GlobalState state_of(const ProblemFile& file, const json& result) {
  std::vector<int> counts = result["state"].get<std::vector<int>>();
  if (one_based(file.kind)) {
    for (int& x : counts) --x;
  }
  return GlobalState(std::move(counts));
}

bool contains(const std::vector<GlobalState>& states, const GlobalState& g) {
  return std::binary_search(states.begin(), states.end(), g);
}

// Certifies results of engines that search a predicate adapter's lattice.
void check_adapter_row(const ProblemFile& file, EngineRow& row, json& oracles,
                       const RunOptions& options) {
  const json& r = row.result;
  const bool found = r["found"].get<bool>();
  // Each engine is checked against the brute-force scan of the predicate it
  // actually searched.
  const auto adapter = make_adapter(file, row.engine);
  const OracleReport report = brute_force_detect(*adapter, adapter->poset(), options.budget_ideals);
  const std::string oracle = "brute-force:" + std::string(adapter->name());
  oracles[oracle] = {{"satisfiable", report.satisfiable()},
                     {"satisfying_states", report.satisfying_states.size()}};
  bool ok = found == report.satisfiable();
  if (found) {
    const GlobalState g = state_of(file, r);
    ok = ok && contains(report.satisfying_states, g);
    if (row.engine == "llp" || row.engine == "rejection" || row.engine == "brute-force") {
      ok = ok && (!report.least || *report.least == g);
    }
  }
  row.check(oracle, ok);

  if (!found) {
    // Every adapter kind except conjunctive always has a satisfying state;
    // the brute-force check already covers the unsatisfiable case.
    return;
  }
  const GlobalState g = state_of(file, r);
  switch (file.kind) {
    case Kind::Matching: {
      const int size = max_matching(std::get<BipartiteInstance>(file.payload));
      oracles["max-matching"] = size;
      row.check("max-matching", g.level() == size);
      break;
    }
    case Kind::Mst: {
      const auto& graph = std::get<WeightedGraph>(file.payload);
      const SpanningForest forest = kruskal_mst(graph);
      oracles["kruskal"] = {{"weight", forest.weight}};
      // Without unique weights the exhaustive scan certifies a spanning
      // forest only, not a minimum one.
      if (row.engine != "brute-force" || distinct_weights(graph)) {
        row.check("kruskal", r["extra"]["weight"].get<std::int64_t>() == forest.weight);
      }
      break;
    }
    case Kind::Basis: {
      const int rank = rational_rank(std::get<VectorSet>(file.payload));
      oracles["rational-rank"] = rank;
      row.check("rational-rank", g.level() == rank);
      break;
    }
    case Kind::Marriage: {
      const auto& inst = std::get<MarriageInstance>(file.payload);
      const std::vector<int> optimal = gale_shapley(inst);
      oracles["gale-shapley"] = optimal;
      std::vector<int> wife(g.size());
      for (std::size_t m = 0; m < g.size(); ++m) wife[m] = inst.mpref[m][static_cast<std::size_t>(g[m])];
      bool ok_gs = is_stable(inst, wife);
      if (row.engine != "bidirectional") ok_gs = ok_gs && g.vector() == optimal;
      row.check("gale-shapley", ok_gs);
      break;
    }
    case Kind::Housing: {
      const auto& inst = std::get<HousingInstance>(file.payload);
      const std::vector<int> ttc = top_trading_cycles(inst);
      oracles["top-trading-cycles"] = ttc;
      std::vector<int> house(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) house[i] = inst.pref[i][static_cast<std::size_t>(g[i])];
      row.check("top-trading-cycles", house == ttc && !blocking_coalition(inst, house));
      break;
    }
    case Kind::Reach:
    case Kind::Closure: {
      const auto& d = std::get<Digraph>(file.payload);
      const auto fw = floyd_warshall_closure(d);
      const auto n = static_cast<std::size_t>(d.vertex_count);
      bool same = true;
      if (file.kind == Kind::Reach) {
        for (std::size_t j = 0; j < n; ++j) same = same && ((g[j] == 1) == fw[static_cast<std::size_t>(d.source)][j]);
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) same = same && ((g[i * n + j] == 1) == fw[i][j]);
        }
      }
      oracles["floyd-warshall"] = "computed";
      row.check("floyd-warshall", same);
      break;
    }
    case Kind::Conjunctive:
    case Kind::LevelK:
    case Kind::SubsetSum:
      break;
  }
}

std::vector<std::int64_t> level_k_targets(const Computation& c, const RunOptions& options) {
  if (options.k) return {*options.k};
  std::int64_t top = 0;
  for (std::size_t i = 0; i < c.process_count(); ++i) {
    top += c.state_counts.empty() ? c.events(i) : c.state_counts[i].back();
  }
  std::vector<std::int64_t> ks(static_cast<std::size_t>(top) + 1);
  for (std::size_t k = 0; k < ks.size(); ++k) ks[k] = static_cast<std::int64_t>(k);
  return ks;
}

void verify_level_k(const ProblemFile& file, const RunOptions& options, json& oracles,
                    std::vector<EngineRow>& rows) {
  Computation storage;
  const Computation& c = computation_of(file, storage);
  // Independent oracle: levels of all consistent all-true cuts, or the
  // subset-sum dynamic program for subset-sum files.
  std::set<std::int64_t> satisfiable_levels;
  if (file.kind != Kind::SubsetSum) {
    auto adapter = conjunctive_adapter(c);
    for (const auto& g : brute_force_detect(*adapter, adapter->poset(), options.budget_ideals).satisfying_states) {
      satisfiable_levels.insert(c.level(g));
    }
  }
  json expected = json::object();
  for (std::int64_t k : level_k_targets(c, options)) {
    RunOptions per_k = options;
    per_k.k = k;
    per_k.engine = "levelk";
    EngineRow row{"levelk k=" + std::to_string(k), run_detection(file, per_k)};
    const bool want = file.kind == Kind::SubsetSum
                          ? subset_sum_dp(std::get<SubsetSumInstance>(file.payload).values, k)
                          : satisfiable_levels.count(k) > 0;
    const std::string oracle = file.kind == Kind::SubsetSum ? "subset-sum-dp" : "brute-force:levels";
    expected[std::to_string(k)] = want;
    row.check(oracle, row.result["found"].get<bool>() == want);
    rows.push_back(std::move(row));
  }
  oracles[file.kind == Kind::SubsetSum ? "subset-sum-dp" : "brute-force:levels"] = expected;
}

}  // namespace

json verify_problem(const ProblemFile& file, const std::vector<std::string>& engines,
                    const RunOptions& options) {
  std::vector<std::string> selected = engines.empty() ? engines_for(file.kind) : engines;
  if (engines.empty() && file.kind == Kind::Mst &&
      !distinct_weights(std::get<WeightedGraph>(file.payload))) {
    // These engines require unique weights; by default run only the rest.
    std::erase_if(selected, [](const std::string& e) {
      return e == "boruvka" || e == "parallel-mst" || e == "llp";
    });
  }
  const auto applicable = engines_for(file.kind);
  for (const auto& e : selected) {
    if (std::find(applicable.begin(), applicable.end(), e) == applicable.end()) {
      throw InvalidInput("engine '" + e + "' is not applicable to kind '" +
                         std::string(kind_name(file.kind)) + "'");
    }
  }
  // The exhaustive oracles refuse outright rather than skip.
  if (has_adapter_lattice(file.kind)) {
    const auto adapter = make_adapter(file, "");
    if (adapter->poset().product_size() > options.budget_ideals) {
      throw OracleTooLarge("verify: lattice has " + std::to_string(adapter->poset().product_size()) +
                           " candidate states, above the budget of " +
                           std::to_string(options.budget_ideals) + " (raise --budget-ideals)");
    }
  }

  json oracles = json::object();
  std::vector<EngineRow> rows;
  for (const auto& engine : selected) {
    if (engine == "levelk") {
      verify_level_k(file, options, oracles, rows);
      continue;
    }
    RunOptions per_engine = options;
    per_engine.engine = engine;
    EngineRow row{engine, run_detection(file, per_engine)};
    if (engine == "parallel-mst") {
      const auto& graph = std::get<WeightedGraph>(file.payload);
      const SpanningForest forest = kruskal_mst(graph);
      std::vector<bool> kruskal_bits(graph.edges.size(), false);
      for (auto e : forest.edges) kruskal_bits[e] = true;
      oracles["kruskal"] = {{"weight", forest.weight}};
      row.check("kruskal", mst_input_bits(graph, state_of(file, row.result)) == kruskal_bits);
    } else {
      check_adapter_row(file, row, oracles, options);
    }
    rows.push_back(std::move(row));
  }

  json report;
  report["kind"] = std::string(kind_name(file.kind));
  report["oracles"] = oracles;
  report["engines"] = json::array();
  bool all = true;
  for (const auto& row : rows) {
    all = all && row.agree;
    report["engines"].push_back({{"engine", row.engine},
                                 {"found", row.result["found"]},
                                 {"state", row.result["state"]},
                                 {"checks", row.checks},
                                 {"agree", row.agree}});
  }
  report["agree"] = all;
  return report;
}

int verify_command(const std::string& path, const std::vector<std::string>& engines,
                   const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const json report = verify_problem(load_problem(path), engines, options);
    write_document(report, options.output, out);
    if (!report["agree"].get<bool>()) {
      err << "verify: engines disagree with the oracles\n";
      return kExitNotFound;
    }
    return kExitFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

ProblemFile generate(Kind kind, const GenOptions& o) {
  if (o.density < 0.0 || o.density > 1.0) throw InvalidInput("gen: density must be in [0, 1]");
  const auto limit = [](int value, int lo, int hi, const char* what) {
    if (value < lo || value > hi) {
      throw InvalidInput(std::string("gen: ") + what + " must be in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
    }
  };
  ProblemFile file;
  file.kind = kind;
  switch (kind) {
    case Kind::Matching:
      limit(o.n, 0, 256, "--n");
      file.payload = random_bipartite(o.n, o.n, o.density, o.seed);
      break;
    case Kind::Mst:
      limit(o.vertices, 1, 4096, "--vertices");
      file.payload = random_connected_graph(o.vertices, o.density, o.unique_weights, o.seed);
      break;
    case Kind::Basis:
      limit(o.n, 0, 256, "--n");
      limit(o.dimension, 0, 256, "--dimension");
      if (o.max_value < 0 || o.max_value > 1'000'000) throw InvalidInput("gen: --max-value must be in [0, 1000000]");
      file.payload = random_vectors(o.n, o.dimension, static_cast<int>(o.max_value), o.seed);
      break;
    case Kind::Marriage:
      limit(o.n, 1, 64, "--n");
      file.payload = random_marriage(o.n, o.seed);
      break;
    case Kind::Housing:
      limit(o.n, 1, 64, "--n");
      file.payload = random_housing(o.n, o.seed);
      break;
    case Kind::Conjunctive:
    case Kind::LevelK:
      limit(o.processes, 1, 64, "--processes");
      limit(o.events, 0, 64, "--events");
      file.payload = random_computation(o.processes, o.events, o.density, 0.6, o.seed);
      break;
    case Kind::Reach:
    case Kind::Closure:
      limit(o.vertices, 1, 256, "--vertices");
      file.payload = random_digraph(o.vertices, o.density, o.seed);
      if (kind == Kind::Closure) std::get<Digraph>(file.payload).source = 0;
      break;
    case Kind::SubsetSum: {
      limit(o.n, 0, 64, "--n");
      if (o.max_value < 1 || o.max_value > 1'000'000) throw InvalidInput("gen: --max-value must be in [1, 1000000]");
      Rng rng(o.seed);
      SubsetSumInstance inst;
      for (int i = 0; i < o.n; ++i) inst.values.push_back(rng.uniform(1, o.max_value));
      file.payload = inst;
      break;
    }
  }
  file.validate();
  return file;
}

int gen_command(const std::string& kind, const GenOptions& options,
                const std::optional<std::string>& output, std::ostream& out, std::ostream& err) {
  try {
    const ProblemFile file = generate(parse_kind(kind), options);
    write_document(to_json(file), output, out);
    return kExitFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace latdet::cli
