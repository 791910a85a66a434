#pragma once

// The run / verify / gen subcommands as plain functions so the test suite
// can drive them without spawning processes.
//
// Exit status: 0 Found (run) or full agreement (verify); 1 NotFound or a
// disagreement; 2 usage, validation or budget error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "latdet/lattice.hpp"
#include "latdet_cli/problem_file.hpp"

namespace latdet::cli {

inline constexpr int kExitFound = 0;
inline constexpr int kExitNotFound = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
  /// Empty selects the kind's default engine.
  std::string engine;
  std::optional<std::int64_t> k;
  unsigned workers = 0;
  std::uint64_t budget_ideals = kDefaultIdealBudget;
  /// Test fixture: wraps the adapter in one whose predicate holds everywhere.
  bool inject_fault = false;
  /// Write the document here instead of standard output.
  std::optional<std::string> output;
};

/// Engine names accepted for a kind, default first.
std::vector<std::string> engines_for(Kind kind);

/// Runs one detection and returns the result document. Throws latdet::Error
/// on usage or validation problems.
nlohmann::json run_detection(const ProblemFile& file, const RunOptions& options);

/// `run`: executes as `kind` (which must match the file, except that
/// levelk also accepts conjunctive and subset-sum files).
int run_command(const std::string& kind, const std::string& path, const RunOptions& options,
                std::ostream& out, std::ostream& err);

/// Runs every listed engine (all applicable ones when empty) plus the
/// kind's oracles and reports agreement per engine.
nlohmann::json verify_problem(const ProblemFile& file, const std::vector<std::string>& engines,
                              const RunOptions& options);

int verify_command(const std::string& path, const std::vector<std::string>& engines,
                   const RunOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  int n = 4;
  int vertices = 8;
  int dimension = 3;
  int processes = 3;
  int events = 3;
  double density = 0.3;
  std::int64_t max_value = 20;
  bool unique_weights = false;
  std::uint64_t seed = 0;
};

ProblemFile generate(Kind kind, const GenOptions& options);

int gen_command(const std::string& kind, const GenOptions& options,
                const std::optional<std::string>& output, std::ostream& out, std::ostream& err);

}  // namespace latdet::cli
