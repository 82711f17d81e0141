#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "prand/sweep.hpp"

namespace prand {

/// Outcome of one property check: "PASS|FAIL <id> key=value ..." plus witnesses.
struct CheckReport {
  std::string id;
  bool pass = true;
  std::size_t violations = 0;
  std::vector<std::pair<std::string, std::string>> fields;
  std::vector<std::string> witnesses;

  static constexpr std::size_t kMaxWitnesses = 5;

  explicit CheckReport(std::string check_id = {}) : id(std::move(check_id)) {}

  CheckReport& set(std::string key, std::string value);
  CheckReport& set(std::string key, std::size_t value) { return set(std::move(key), std::to_string(value)); }
  void fail(std::string witness);
  /// Folds a sweep result in under a label ("monotone: ...").
  void absorb(const std::string& label, const ViolationSet& v);
  /// Folds a sub-report in; the sub-report's fields are prefixed with its id.
  void absorb(const CheckReport& sub);

  std::string line() const;
};

std::ostream& operator<<(std::ostream& os, const CheckReport& r);

}  // namespace prand
