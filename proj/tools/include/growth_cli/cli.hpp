#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growth/subset.hpp"

namespace growth::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct Command {
  std::string subcommand;  // cartan, finite, fq, series, matrix, oracle, verify, check, selftest
  std::string type_label;
  int rank = 0;
  std::optional<std::vector<int>> j, k, q, subset;
  std::string what = "poincare";  // finite: poincare | pmatrix | hmatrix | check
  std::optional<unsigned> expand_degree;
  int max_length = 10;
  unsigned degree = 20;
  bool normalizer = false;
  bool cross_check = false;
  std::string format = "text";  // text | json | latex
  std::string fixtures_dir;
  std::string cache_dir;
};

/// "1,3", "1 3" or "" (the empty subset).
std::vector<int> parse_ids(std::string_view text);
/// Validates ids against 1..rank.
Subset to_subset(const std::vector<int>& ids, int rank);

/// Fills cmd from argv-style arguments (without the program name). Returns
/// nullopt when the command should run, or the exit code to stop with
/// (0 after --help, 2 on a usage error).
std::optional<int> parse(const std::vector<std::string>& args, Command& cmd, std::ostream& out, std::ostream& err);

int run(const Command& cmd, std::ostream& out, std::ostream& err);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace growth::cli
