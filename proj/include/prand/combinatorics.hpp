#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace prand {

/// All masks over n elements with popcount <= k, ordered by popcount then value.
std::vector<std::uint64_t> subsets_up_to(std::size_t n, std::size_t k);

/// Bell number B(n); B(0) = 1.
std::uint64_t bell_number(std::size_t n);

/// Visits every set partition of {0..n-1} in restricted-growth-string order.
///
/// The visitor receives the blocks as bitmasks, ordered by smallest element.
/// Returning false from the visitor stops the enumeration.
template <class Visitor>
void for_each_set_partition(std::size_t n, Visitor&& visit) {
  if (n == 0) {
    std::vector<std::uint64_t> none;
    visit(none);
    return;
  }
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of rgs[0..i]
  std::vector<std::uint64_t> blocks;
  for (;;) {
    blocks.assign(prefix_max[n - 1] + 1, 0);
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]] |= std::uint64_t{1} << i;
    if (!visit(static_cast<const std::vector<std::uint64_t>&>(blocks))) return;
    // Next RGS: bump the rightmost position that may still grow.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

inline int popcount(std::uint64_t m) { return std::popcount(m); }

}  // namespace prand
