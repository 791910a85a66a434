#include "latdet_cli/problem_file.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "latdet/error.hpp"

namespace latdet::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 10> kKindNames{{
    {Kind::Matching, "matching"},
    {Kind::Mst, "mst"},
    {Kind::Basis, "basis"},
    {Kind::Marriage, "marriage"},
    {Kind::Housing, "housing"},
    {Kind::Conjunctive, "conjunctive"},
    {Kind::LevelK, "levelk"},
    {Kind::Reach, "reach"},
    {Kind::Closure, "closure"},
    {Kind::SubsetSum, "subset-sum"},
}};

const json& field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw InvalidInput(std::string("problem file: missing field '") + name + "'");
  }
  return obj.at(name);
}

template <class T>
T get(const json& obj, const char* name) {
  try {
    return field(obj, name).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("problem file: field '") + name + "': " + e.what());
  }
}

std::vector<std::vector<bool>> get_matrix(const json& obj, const char* name) {
  std::vector<std::vector<bool>> out;
  for (const auto& row : get<std::vector<std::vector<int>>>(obj, name)) {
    std::vector<bool> bits;
    for (int x : row) {
      if (x != 0 && x != 1) throw InvalidInput("problem file: adjacency entries must be 0 or 1");
      bits.push_back(x == 1);
    }
    out.push_back(std::move(bits));
  }
  return out;
}

json matrix_json(const std::vector<std::vector<bool>>& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (bool b : row) r.push_back(b ? 1 : 0);
    rows.push_back(std::move(r));
  }
  return rows;
}

Payload parse_payload(Kind kind, const json& p) {
  switch (kind) {
    case Kind::Matching: {
      BipartiteInstance inst;
      inst.left_count = get<int>(p, "left_count");
      inst.right_count = get<int>(p, "right_count");
      inst.edges = get<std::vector<std::pair<int, int>>>(p, "edges");
      return inst;
    }
    case Kind::Mst: {
      WeightedGraph g;
      g.vertex_count = get<int>(p, "vertex_count");
      g.unique_weights = p.contains("unique_weights") && get<bool>(p, "unique_weights");
      for (const auto& e : get<json>(p, "edges")) {
        g.edges.push_back({get<int>(e, "u"), get<int>(e, "v"), get<std::int64_t>(e, "weight")});
      }
      return g;
    }
    case Kind::Basis:
      return VectorSet{get<int>(p, "dimension"),
                       get<std::vector<std::vector<std::int64_t>>>(p, "vectors")};
    case Kind::Marriage:
      return MarriageInstance{get<int>(p, "n"), get<std::vector<std::vector<int>>>(p, "mpref"),
                              get<std::vector<std::vector<int>>>(p, "rank")};
    case Kind::Housing:
      return HousingInstance{get<int>(p, "n"), get<std::vector<std::vector<int>>>(p, "pref")};
    case Kind::Conjunctive:
    case Kind::LevelK: {
      Computation c;
      c.clocks = get<std::vector<std::vector<std::vector<int>>>>(p, "clocks");
      c.local_predicate = get<std::vector<std::vector<bool>>>(p, "local_predicate");
      if (p.contains("state_counts")) {
        c.state_counts = get<std::vector<std::vector<std::int64_t>>>(p, "state_counts");
      }
      return c;
    }
    case Kind::Reach:
    case Kind::Closure: {
      Digraph d;
      d.vertex_count = get<int>(p, "vertex_count");
      d.adjacency = get_matrix(p, "adjacency");
      d.source = kind == Kind::Reach ? get<int>(p, "source") : 0;
      return d;
    }
    case Kind::SubsetSum:
      return SubsetSumInstance{get<std::vector<std::int64_t>>(p, "values")};
  }
  throw InvalidInput("problem file: unknown kind");
}

json payload_json(Kind kind, const Payload& payload) {
  json p = json::object();
  switch (kind) {
    case Kind::Matching: {
      const auto& inst = std::get<BipartiteInstance>(payload);
      p["left_count"] = inst.left_count;
      p["right_count"] = inst.right_count;
      p["edges"] = inst.edges;
      break;
    }
    case Kind::Mst: {
      const auto& g = std::get<WeightedGraph>(payload);
      p["vertex_count"] = g.vertex_count;
      p["unique_weights"] = g.unique_weights;
      p["edges"] = json::array();
      for (const auto& e : g.edges) p["edges"].push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
      break;
    }
    case Kind::Basis: {
      const auto& s = std::get<VectorSet>(payload);
      p["dimension"] = s.dimension;
      p["vectors"] = s.vectors;
      break;
    }
    case Kind::Marriage: {
      const auto& m = std::get<MarriageInstance>(payload);
      p["n"] = m.n;
      p["mpref"] = m.mpref;
      p["rank"] = m.rank;
      break;
    }
    case Kind::Housing: {
      const auto& h = std::get<HousingInstance>(payload);
      p["n"] = h.n;
      p["pref"] = h.pref;
      break;
    }
    case Kind::Conjunctive:
    case Kind::LevelK: {
      const auto& c = std::get<Computation>(payload);
      p["clocks"] = c.clocks;
      p["local_predicate"] = c.local_predicate;
      if (!c.state_counts.empty()) p["state_counts"] = c.state_counts;
      break;
    }
    case Kind::Reach:
    case Kind::Closure: {
      const auto& d = std::get<Digraph>(payload);
      p["vertex_count"] = d.vertex_count;
      p["adjacency"] = matrix_json(d.adjacency);
      if (kind == Kind::Reach) p["source"] = d.source;
      break;
    }
    case Kind::SubsetSum:
      p["values"] = std::get<SubsetSumInstance>(payload).values;
      break;
  }
  return p;
}

}  // namespace

std::string_view kind_name(Kind k) {
  for (const auto& [kind, name] : kKindNames) {
    if (kind == k) return name;
  }
  return "unknown";
}

Kind parse_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames) {
    if (n == name) return kind;
  }
  throw InvalidInput("unknown kind '" + std::string(name) + "'");
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = [] {
    std::vector<Kind> out;
    for (const auto& entry : kKindNames) out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

void ProblemFile::validate() const {
  std::visit(
      [](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, SubsetSumInstance>) {
          for (auto v : inst.values) {
            if (v <= 0) throw InvalidInput("subset sum: values must be positive");
          }
        } else {
          inst.validate();
        }
      },
      payload);
}

ProblemFile parse_problem(const json& doc) {
  ProblemFile file;
  file.kind = parse_kind(get<std::string>(doc, "kind"));
  file.payload = parse_payload(file.kind, field(doc, "payload"));
  file.validate();
  return file;
}

ProblemFile parse_problem_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("problem file: malformed document: ") + e.what());
  }
  return parse_problem(doc);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open problem file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_problem_text(text.str());
}

json to_json(const ProblemFile& file) {
  return {{"kind", std::string(kind_name(file.kind))}, {"payload", payload_json(file.kind, file.payload)}};
}

std::string serialize(const ProblemFile& file) { return to_json(file).dump(2) + "\n"; }

}  // namespace latdet::cli
