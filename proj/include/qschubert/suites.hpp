#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qschubert/serialize.hpp"

namespace qschubert {

enum class OutputFormat { Text, Json };

inline constexpr std::uint64_t kDefaultSeed = 20240607;

struct RunConfig {
  Shape shape{2, 4};
  std::optional<IndexSet> gamma;
  std::optional<IndexPair> delta;
  /// Unset: the suite's manifest default.
  std::optional<int> max_degree;
  /// Unset: generic q.
  std::optional<Rational> q0;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = kDefaultSeed;

  /// m, n >= 1, D >= 0, q0 != 0, gamma/delta fit the shape.
  void validate() const;
};

/// Desk-scale defaults of every suite, with a version number.
const Json& manifest();

/// Suite names in the order "check all" runs them.
const std::vector<std::string>& suite_names();

struct ReportLine {
  std::string suite;
  std::string case_name;
  /// "pass", "fail", "budget" (BudgetExceeded) or "error".
  std::string status;
  std::string witness;

  bool passed() const noexcept { return status == "pass"; }
};

Json to_json(const ReportLine& line);

/// Runs one suite, or all of them for "all". Errors inside a case become
/// report lines; an unknown suite name is InvalidArgument.
std::vector<ReportLine> run_suite(const std::string& name, const RunConfig& config);

bool all_passed(const std::vector<ReportLine>& lines);

/// Text: one "status suite case: witness" line per case and a summary line.
/// JSON: {"manifest_version", "passed", "report": [{suite, case, status, witness}]}.
std::string format_report(const std::vector<ReportLine>& lines, OutputFormat format);

}  // namespace qschubert
