#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aluffi::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<std::string> tags;
  bool passed = false;
  /// One line per check, "ok ..." or "FAIL ...".
  std::vector<std::string> details;
  double seconds = 0;
};

struct SuiteOptions {
  /// Criterion number or tag; unset runs everything.
  std::optional<std::string> only;
  /// Criteria that run on fixture data with a deliberate sign error.
  std::vector<int> inject;
  std::uint64_t seed = 1;
};

struct CriterionInfo {
  int id;
  std::string title;
  std::vector<std::string> tags;
};

std::vector<CriterionInfo> criteria();
bool selected(const CriterionInfo& c, const std::optional<std::string>& only);

std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "PASS  criterion 1  four-points torsion (0.12 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace aluffi::acceptance
