#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "prand/antichain.hpp"
#include "prand/combinatorics.hpp"
#include "prand/sweep.hpp"

using namespace prand;

TEST_SUITE("kernels") {
  TEST_CASE("subsets_up_to counts binomials, smallest first") {
    const auto s = subsets_up_to(7, 3);
    CHECK(s.size() == 1 + 7 + 21 + 35);
    CHECK(s.front() == 0);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(popcount(s[i - 1]) <= popcount(s[i]));
    CHECK(std::set<std::uint64_t>(s.begin(), s.end()).size() == s.size());
  }

  TEST_CASE("set partitions match Bell numbers and are distinct") {
    for (std::size_t n = 0; n <= 7; ++n) {
      std::set<std::vector<std::uint64_t>> seen;
      for_each_set_partition(n, [&](const std::vector<std::uint64_t>& blocks) {
        std::uint64_t all = 0;
        for (auto b : blocks) {
          CHECK((all & b) == 0);
          CHECK(b != 0);
          all |= b;
        }
        CHECK(all == (n == 0 ? 0 : (1ULL << n) - 1));
        seen.insert(blocks);
        return true;
      });
      CHECK(seen.size() == bell_number(n));
    }
    CHECK(bell_number(8) == 4140);
  }

  TEST_CASE("max-weight antichain matches brute force") {
    const StringSet u = universe(3);
    for (auto mask : subsets_up_to(u.size(), 5)) {
      const StringSet s = u.select(mask);
      std::vector<int> w;
      for (std::size_t i = 0; i < s.size(); ++i) w.push_back(static_cast<int>((mask >> i) % 5) + 1);
      int best = 0;
      for (std::uint64_t sub = 0; sub < (1ULL << s.size()); ++sub) {
        if (!is_prefix_free(s.select(sub))) continue;
        int total = 0;
        for (std::size_t i = 0; i < s.size(); ++i) total += (sub >> i & 1U) ? w[i] : 0;
        best = std::max(best, total);
      }
      CHECK(max_weight_antichain(s, w) == best);
    }
  }

  TEST_CASE("serial and parallel sweeps agree") {
    const std::size_t n = 10000;
    auto fn = [](std::size_t i) { return static_cast<std::uint64_t>(i * i % 97); };
    CHECK(map_indices<std::uint64_t>(n, Exec::serial, fn) == map_indices<std::uint64_t>(n, Exec::parallel, fn));
    auto keep = [](std::size_t i) -> std::optional<std::string> {
      if (i % 37 == 5) return std::to_string(i);
      return std::nullopt;
    };
    const auto a = collect_violations(n, Exec::serial, 5, keep);
    const auto b = collect_violations(n, Exec::parallel, 5, keep);
    CHECK(a.count == b.count);
    CHECK(a.first == b.first);
    CHECK(a.first.front().first == 5);
  }

  TEST_CASE("the lowest-index exception wins") {
    auto boom = [](std::size_t i) {
      if (i == 300 || i == 9000) throw std::runtime_error(std::to_string(i));
    };
    for (Exec e : {Exec::serial, Exec::parallel}) {
      try {
        for_each_index(10000, e, boom);
        FAIL("no exception");
      } catch (const std::runtime_error& ex) {
        CHECK(std::string(ex.what()) == "300");
      }
    }
  }
}
