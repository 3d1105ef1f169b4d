#pragma once

// Batch verification driver behind the `qwallach` command line tool.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qwallach/flag.hpp"
#include "qwallach/report.hpp"

namespace qwallach::cli {

inline constexpr const char* kToolName = "qwallach";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kJsonSchema = 1;

enum ExitStatus : int {
  kPass = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

enum class Format { text, json };

struct RunConfig {
  /// One of: hecke-identity, group-identity, lemma3, factorization, span,
  /// structure-constants, multiplicities, all.
  std::string command;
  std::optional<int> n;
  std::vector<std::int64_t> qs;
  std::optional<std::pair<int, int>> t_range;
  std::size_t budget = kDefaultFlagBudget;
  Format format = Format::text;
  bool debug_orbit_checks = false;
  bool allow_large = false;
};

struct Report {
  RunConfig config;
  std::vector<Check> checks;

  bool overall_pass() const { return all_pass(checks); }
};

/// Throws std::invalid_argument when the configuration is unusable.
void validate(const RunConfig& config);

/// Runs the configured verification. Throws std::invalid_argument or
/// BudgetExceeded for configurations that cannot run.
Report run(const RunConfig& config);

nlohmann::json to_json(const Report& report);
std::string to_text(const Report& report);

/// Parses "a..b", "a-b" or "a" into an inclusive range.
std::pair<int, int> parse_range(const std::string& text);

/// Full command line entry point; returns the process exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwallach::cli
