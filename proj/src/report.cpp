#include "prand/report.hpp"

#include <sstream>

namespace prand {

CheckReport& CheckReport::set(std::string key, std::string value) {
  for (auto& [k, v] : fields) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

void CheckReport::fail(std::string witness) {
  pass = false;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void CheckReport::absorb(const std::string& label, const ViolationSet& v) {
  if (v.count == 0) return;
  pass = false;
  violations += v.count;
  for (const auto& [index, w] : v.first) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(label + ": " + w);
  }
}

void CheckReport::absorb(const CheckReport& sub) {
  if (!sub.pass) pass = false;
  violations += sub.violations;
  for (const auto& [k, v] : sub.fields) set(sub.id + "." + k, v);
  for (const auto& w : sub.witnesses) {
    if (witnesses.size() >= kMaxWitnesses) break;
    witnesses.push_back(sub.id + ": " + w);
  }
}

std::string CheckReport::line() const {
  std::ostringstream os;
  os << (pass ? "PASS " : "FAIL ") << id;
  for (const auto& [k, v] : fields) os << ' ' << k << '=' << v;
  if (!pass) os << " violations=" << violations;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
  os << r.line() << '\n';
  for (const auto& w : r.witnesses) os << "  witness " << w << '\n';
  return os;
}

}  // namespace prand
