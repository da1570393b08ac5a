#pragma once

#include <string>
#include <utility>
#include <vector>

namespace psum {

struct Bounds {
  long max_k = 8;
  long max_n = 50;
};

struct CheckSpec {
  std::string name;
  std::string suite;   // core | appendix | bernoulli | faulhaber | triangles
  std::string anchor;  // source equation/section the check exercises
};

// One line of the report. A check that passes everywhere contributes a single
// entry whose params echo the grid bounds; each failing instance contributes
// its own entry with the offending parameters and both exact values.
struct ReportEntry {
  std::string name;
  std::vector<std::pair<std::string, long>> params;
  bool pass = true;
  std::string lhs;
  std::string rhs;
};

struct CheckSummary {
  std::string name;
  long instances = 0;
  long failed = 0;
};

struct VerificationReport {
  std::string suite;
  Bounds bounds;
  std::vector<ReportEntry> entries;      // sorted by name, then params
  std::vector<CheckSummary> summaries;   // sorted by name
  long passed = 0;
  long failed = 0;
  double wall_seconds = 0;
  bool ok() const { return failed == 0; }
};

std::vector<CheckSpec> list_checks();

// suite_or_check accepts a suite name (core, appendix, bernoulli, faulhaber,
// triangles, all) or an individual check name; anything else throws
// std::invalid_argument.
VerificationReport run_suite(const std::string& suite_or_check, const Bounds& bounds);

std::string report_to_json(const VerificationReport& report);
std::string report_to_table(const VerificationReport& report);

}  // namespace psum
