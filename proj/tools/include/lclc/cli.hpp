#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lclc/lattice.hpp"
#include "lclc/report.hpp"

namespace lclc::cli {

enum class Command {
  Verify,
  Entropy,
  Varentropy,
  Phi,
  Crossing,
  Match,
  Concentration,
  Constants,
  Counterexample,
  Epi,
};

enum class OutputFormat { Csv, Json };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::filesystem::path> input_path;
  /// Keyed by long flag name without dashes: "p", "t-grid", "seed", ...
  std::map<std::string, std::string> parameters;
  OutputFormat output_format = OutputFormat::Csv;
  std::optional<std::filesystem::path> out_path;
};

/// Bad flags, missing parameters, unreadable input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StructureReport {
  bool log_concave = false;
  Direction direction = Direction::Neither;
  /// Symmetry center, integer or half-integer.
  std::optional<double> center;
  bool integer_center = false;
  std::size_t support_size = 0;
};

StructureReport classify(const LatticePMF& x);
CheckReport to_report(const StructureReport& s);

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

/// Parses argv into a RunConfig. Throws UsageError; `--help` output is
/// written to `out` and returns std::nullopt.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes one invocation. Report rows go to `out` (or the --out file),
/// diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// CSV columns: check_name,lhs,rhs,margin,verdict,params. Nested rows are flattened.
void write_reports(std::ostream& out, std::span<const CheckReport> reports, OutputFormat format);

/// Parses "0.1,0.25,inf" style lists.
std::vector<double> parse_number_list(const std::string& text);
double parse_number(const std::string& text);

}  // namespace lclc::cli
