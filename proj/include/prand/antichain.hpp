#pragma once

#include <cstddef>
#include <vector>

#include "prand/strings.hpp"

namespace prand {

/// For each member, the index of its longest proper prefix in the set, or -1.
std::vector<std::ptrdiff_t> nearest_ancestors(const StringSet& s);

/// Maximum total weight of a prefix-free subset of s (weights aligned with s).
///
/// Prefix order restricted to a finite set is a forest; the best antichain of a
/// subtree either takes its root alone or the best antichains of its children.
template <class W>
W max_weight_antichain(const StringSet& s, const std::vector<W>& weight) {
  const auto parent = nearest_ancestors(s);
  std::vector<W> below(s.size(), W{});
  W total{};
  for (std::size_t k = s.size(); k-- > 0;) {
    W best = weight[k] < below[k] ? below[k] : weight[k];
    if (parent[k] < 0) {
      total += best;
    } else {
      below[static_cast<std::size_t>(parent[k])] += best;
    }
  }
  return total;
}

}  // namespace prand
