#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "primnorm/group.hpp"

namespace primnorm::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kParseError = 1,     // bad arguments, unreadable or malformed files
  kPrecondition = 2,   // imprimitive input and other precondition failures
  kBudget = 3,         // a node, coset or oracle budget was exceeded
  kOracleMismatch = 4, // --oracle or oracle-check disagreed with the result
  kInternal = 5,
};

/// Environment variable holding the default node budget for the backtrack.
inline constexpr const char* kBudgetEnv = "PRIMNORM_BUDGET";

/// Runs the command line. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// How the oracle comparison went.
enum class OracleVerdict { agree, mismatch, skipped };

const char* verdict_name(OracleVerdict v);

/// Compares n with the brute-force normaliser of g (intersected with h when
/// given). Skipped above the oracle's degree limit.
OracleVerdict oracle_compare(const Group& g, const Group& n, const std::optional<Group>& h = std::nullopt);

struct BenchRow {
  std::string file;
  std::string name;
  std::size_t degree = 0;
  std::string order;
  std::string branch;
  std::string normaliser_order;
  std::uint64_t nodes = 0;
  std::uint64_t cosets = 0;
  double wall_ms = 0;
  std::string oracle;
  std::string error;
};

struct BenchOptions {
  bool oracle = false;
  std::size_t threads = 1;
  std::uint64_t node_budget = 0;
};

/// One row per *.grp file in `dir`, sorted by file name. Failures are recorded in the row.
std::vector<BenchRow> bench_directory(const std::filesystem::path& dir, const BenchOptions& opts);

/// CSV with header file,name,n,order,branch,normaliser_order,nodes,cosets,wall_ms,oracle,error.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace primnorm::cli
