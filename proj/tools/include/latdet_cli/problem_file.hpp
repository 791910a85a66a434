#pragma once

// JSON problem files: {"kind": "<kind>", "payload": {...}}. The payload
// mirrors the fields of the library's instance types.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "latdet/instances.hpp"

namespace latdet::cli {

enum class Kind {
  Matching,
  Mst,
  Basis,
  Marriage,
  Housing,
  Conjunctive,
  LevelK,
  Reach,
  Closure,
  SubsetSum,
};

std::string_view kind_name(Kind k);
/// Throws InvalidInput for an unknown name.
Kind parse_kind(std::string_view name);
const std::vector<Kind>& all_kinds();

struct SubsetSumInstance {
  std::vector<std::int64_t> values;
  friend bool operator==(const SubsetSumInstance&, const SubsetSumInstance&) = default;
};

using Payload = std::variant<BipartiteInstance, WeightedGraph, VectorSet, MarriageInstance,
                             HousingInstance, Computation, Digraph, SubsetSumInstance>;

struct ProblemFile {
  Kind kind = Kind::Matching;
  Payload payload;

  /// Runs the instance's own validation.
  void validate() const;
  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Parses and validates. Throws InvalidInput on malformed documents.
ProblemFile parse_problem(const nlohmann::json& doc);
ProblemFile parse_problem_text(std::string_view text);
ProblemFile load_problem(const std::string& path);

nlohmann::json to_json(const ProblemFile& file);
/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string serialize(const ProblemFile& file);

}  // namespace latdet::cli
