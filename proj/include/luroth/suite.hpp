#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace luroth {

/// One reproduced claim. `expected` is the published or independently
/// derived value, `actual` what the engine computes. Entries whose
/// published value is known to disagree with the defining formulas are
/// reported as flagged_discrepancy with both values; they do not fail
/// the suite.
struct SuiteEntry {
  std::string claim_id;
  std::string section;     // topic group, used by the --section filter
  std::string command;     // CLI reproduction hint
  std::string expected;
  std::string actual;
  std::string provenance;  // "published" or "derived"
  enum class Status { match, mismatch, flagged_discrepancy } status;
  std::string note;
};

struct VerificationSuite {
  std::vector<SuiteEntry> entries;
  int matches = 0;
  int mismatches = 0;
  int flagged = 0;
  bool pass() const { return mismatches == 0; }
};

/// Runs every claim in the reproduction catalogue; section_filter ""
/// keeps everything, otherwise only entries of that topic group.
VerificationSuite run_suite(const std::string& section_filter = "");

nlohmann::json to_json(const VerificationSuite& suite);

/// Stable plain-text table, one line per entry plus a totals line.
std::string format_suite(const VerificationSuite& suite);

/// Topic groups in catalogue order.
std::vector<std::string> suite_sections();

}  // namespace luroth
