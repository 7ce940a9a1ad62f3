#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace isoprof {

inline constexpr const char* kVersion = "0.1.0";
// Slack for comparisons between two optimizer estimates.
inline constexpr double kEstimatorSlack = 0.05;

enum class CheckStatus { pass, fail, skip };

struct CheckRow {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::skip;
  double lhs = 0.0;
  double rhs = 0.0;
  double tol = 0.0;
  double ms = 0.0;
  int criterion = 0;  // acceptance criterion number, 0 for supplementary rows
  bool hard = true;   // a failing hard row makes the suite fail
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  double tol = 1e-9;
  std::uint64_t budget = 0;  // 0 keeps per-check defaults
  bool timing = false;       // fill the ms column
};

struct SuiteReport {
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<CheckRow> rows;  // sorted by id

  bool passed() const;
  std::vector<const CheckRow*> failures() const;
};

const std::vector<std::string>& suite_names();  // excludes "all"
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});
// Rows belonging to one acceptance criterion (1..12).
SuiteReport run_criterion(int criterion, const VerifyOptions& options = {});

std::string status_name(CheckStatus s);
void write_report_csv(std::ostream& out, const SuiteReport& report);
void write_report_json(std::ostream& out, const SuiteReport& report);

}  // namespace isoprof
