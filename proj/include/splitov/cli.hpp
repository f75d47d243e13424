// Command implementations behind the splitov executable. Each command returns
// a RunReport; run_cli parses arguments, dispatches and prints.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splitov/combinatorics.hpp"
#include "splitov/detect.hpp"
#include "splitov/search.hpp"

namespace splitov::cli {

inline constexpr const char* kVersion = "1.0.0";

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kLowerBound = 3;
inline constexpr int kTableMismatch = 4;
inline constexpr int kValidation = 5;
}  // namespace exit_code

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Fields = std::vector<std::pair<std::string, std::string>>;

struct RunReport {
  std::string command;  // canonical echo of the invocation
  Fields parameters;
  Fields outcome;
  std::string status;
  std::optional<std::uint64_t> nodes;
  std::optional<std::uint64_t> elapsed_ns;
  std::string version = kVersion;
  int exit_code = 0;

  /// First outcome value stored under `key`, if any.
  std::optional<std::string> get(std::string_view key) const;

  std::string render_text() const;
  std::string render_json() const;
  static RunReport parse_text(std::string_view text);
  static RunReport parse_json(std::string_view text);

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct AnalyzeArgs {
  std::string word;
  std::optional<int> k;      // defaults to the largest symbol + 1
  bool text = false;         // map arbitrary characters by first occurrence
  std::optional<int> t;
  std::optional<int> n;
  bool split = false;        // with t: restrict the findings to these kinds
  bool reversed = false;
  GapConvention convention = GapConvention::EmptyPieces;
};

struct SearchArgs {
  Family family = Family::C;
  int k = 2;
  int param = 1;
  GapConvention convention = GapConvention::EmptyPieces;
  std::optional<std::uint64_t> budget;       // nodes per subtree task
  std::optional<std::uint64_t> time_limit_ms;
  int threads = 1;
  int split_depth = 3;
  std::optional<std::string> checkpoint;     // resume from / save to this file
  bool all_witnesses = false;
  bool frontier = false;
  std::uint64_t pass_nodes = 200000;
  std::uint64_t seed = 1;
};

struct BoundsArgs {
  Family family = Family::C;
  int k = 2;
  int param = 1;
};

struct ConstructArgs {
  std::string what;  // c2, c3, debruijn, witness
  std::optional<int> k;
  std::optional<int> n;
  std::optional<std::string> x;
};

struct TableArgs {
  int table = 1;
  // Cells whose value is only bounded (or out of exhaustive reach) run in
  // frontier mode with this many nodes; without it they are skipped.
  std::optional<std::uint64_t> budget_per_cell;
  std::uint64_t exact_budget = 50'000'000;
  int threads = 1;
};

struct VerifyArgs {
  Family family = Family::C;
  int k = 2;
  int param = 1;
  std::string word;
  GapConvention convention = GapConvention::EmptyPieces;
};

RunReport cmd_analyze(const AnalyzeArgs& args);
RunReport cmd_search(const SearchArgs& args);
RunReport cmd_bounds(const BoundsArgs& args);
RunReport cmd_construct(const ConstructArgs& args);
RunReport cmd_table(const TableArgs& args);
RunReport cmd_verify(const VerifyArgs& args);
/// Runs S(2,1), S(2,2), R(2,1), R(2,2) under every gap convention.
RunReport cmd_calibrate();

/// One record of the embedded reference data.
struct ReferenceCell {
  Family family = Family::C;
  int k = 1;
  int param = 1;
  bool exact = true;  // false: the value is a lower bound
  int value = 0;
  std::optional<std::string> witness;
  bool lex_least = false;

  std::string label() const;
};

std::vector<ReferenceCell> parse_reference_data(std::string_view text);
const std::vector<ReferenceCell>& reference_cells();

/// Full command-line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitov::cli
