#include "prand/combinatorics.hpp"

#include <algorithm>

#include "prand/errors.hpp"

namespace prand {

std::vector<std::uint64_t> subsets_up_to(std::size_t n, std::size_t k) {
  if (n > 63) throw BoundedUniverseError("subset enumeration supports at most 63 elements");
  k = std::min(k, n);
  std::vector<std::uint64_t> out;
  // Gosper's hack per popcount.
  out.push_back(0);
  for (std::size_t c = 1; c <= k; ++c) {
    std::uint64_t m = (std::uint64_t{1} << c) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (m < limit) {
      out.push_back(m);
      const std::uint64_t low = m & (~m + 1);
      const std::uint64_t ripple = m + low;
      m = (((ripple ^ m) >> 2) / low) | ripple;
    }
  }
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace prand
