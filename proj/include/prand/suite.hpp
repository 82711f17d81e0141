#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "prand/report.hpp"
#include "prand/sweep.hpp"

namespace prand {

struct SuiteOptions {
  std::string scale = "tiny";  // tiny or small
  Exec exec = Exec::parallel;
  std::uint64_t seed = 20120118;
  std::int64_t cap = 32;
  /// Adds the rule-axiom check of a known non-rule, which must fail.
  bool inject_fixture = false;
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  bool pass() const;
};

/// Runs every property check at the given scale, printing each report to `out`
/// as it completes. Throws std::invalid_argument on an unknown scale.
SuiteResult run_suite(const SuiteOptions& options, std::ostream& out);

}  // namespace prand
