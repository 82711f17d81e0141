#include "prand/antichain.hpp"

namespace prand {

std::vector<std::ptrdiff_t> nearest_ancestors(const StringSet& s) {
  std::vector<std::ptrdiff_t> parent(s.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Shortlex order: the last earlier member that prefixes s[i] is the longest one.
    for (std::size_t j = i; j-- > 0;) {
      if (s[j].size() < s[i].size() && is_prefix(s[j], s[i])) {
        parent[i] = static_cast<std::ptrdiff_t>(j);
        break;
      }
    }
  }
  return parent;
}

}  // namespace prand
