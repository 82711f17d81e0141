#pragma once

// Brute-force reference implementations. They work on plain std::string and
// boost rationals and share no code with the library beyond I/O types.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prand/complexity.hpp"
#include "prand/dyadic.hpp"
#include "prand/strings.hpp"

namespace oracle {

using Q = boost::multiprecision::cpp_rational;
using Str = std::string;
using Set = std::vector<Str>;
using HFn = std::function<std::int64_t(const Str&)>;
using MFn = std::function<Q(const Set&)>;

inline Q pow2(std::int64_t e) {
  Q one = 1;
  boost::multiprecision::cpp_int p = 1;
  p <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? one / Q(p) : Q(p);
}

inline Q to_q(const prand::Dyadic& d) {
  return Q(d.mantissa()) * pow2(d.exponent());
}

inline Set strs(const prand::StringSet& s) {
  Set v;
  for (const auto& x : s) v.push_back(x.bits());
  return v;
}

inline prand::StringSet to_set(const Set& v) {
  std::vector<prand::BinaryString> out;
  for (const auto& x : v) out.emplace_back(x);
  return prand::StringSet(std::move(out));
}

inline bool prefix(const Str& t, const Str& s) { return s.compare(0, t.size(), t) == 0 && t.size() <= s.size(); }

inline bool prefix_free(const Set& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (i != j && prefix(f[i], f[j])) return false;
    }
  }
  return true;
}

inline std::vector<Set> all_subsets(const Set& f) {
  std::vector<Set> out;
  for (std::uint64_t m = 0; m < (1ULL << f.size()); ++m) {
    Set s;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (m >> i & 1U) s.push_back(f[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline HFn len() {
  return [](const Str& s) { return static_cast<std::int64_t>(s.size()); };
}

inline HFn half() {
  return [](const Str& s) { return static_cast<std::int64_t>((s.size() + 1) / 2); };
}

inline Q dwt(const HFn& h, const Set& f) {
  Q total = 0;
  for (const auto& s : f) total += pow2(-h(s));
  return total;
}

inline Q pwt(const HFn& h, const Set& f) {
  Q best = 0;
  for (const auto& s : all_subsets(f)) {
    if (prefix_free(s)) best = std::max(best, dwt(h, s));
  }
  return best;
}

// The supremum over n, scanned well past the largest weight.
inline Q dct(const HFn& h, const Set& f) {
  Q best = 0;
  for (std::int64_t n = 0; n < 40; ++n) {
    std::int64_t count = 0;
    for (const auto& s : f) count += h(s) < n ? 1 : 0;
    best = std::max(best, Q(count) * pow2(-n));
  }
  return best;
}

inline Q pct(const HFn& h, const Set& f) {
  Q best = 0;
  for (const auto& s : all_subsets(f)) {
    if (prefix_free(s)) best = std::max(best, dct(h, s));
  }
  return best;
}

inline bool covered(const Set& a, const Set& b) {
  return std::all_of(a.begin(), a.end(), [&](const Str& s) {
    return std::any_of(b.begin(), b.end(), [&](const Str& t) { return prefix(t, s); });
  });
}

// min m(C) over every C ⊆ universe with F ≺ C.
inline Q star(const MFn& m, const Set& f, const Set& universe) {
  std::optional<Q> best;
  for (const auto& c : all_subsets(universe)) {
    if (!covered(f, c)) continue;
    Q v = m(c);
    if (!best || v < *best) best = v;
  }
  return *best;
}

using Pairs = std::vector<std::pair<Str, std::int64_t>>;

inline Pairs pairs(const prand::FiniteComplexity& r) {
  Pairs out;
  for (const auto& e : r) out.emplace_back(e.sigma.bits(), e.d);
  return out;
}

// m^√ by its definition: every nonempty s ⊆ r has m(ring s) <= 2^-||s||.
inline bool sqrt_member(const MFn& m, const Pairs& r) {
  for (std::uint64_t mask = 1; mask < (1ULL << r.size()); ++mask) {
    Set ring;
    std::int64_t norm = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!(mask >> i & 1U)) continue;
      if (std::find(ring.begin(), ring.end(), r[i].first) == ring.end()) ring.push_back(r[i].first);
      norm = std::min(norm, static_cast<std::int64_t>(r[i].first.size()) - r[i].second);
    }
    if (m(ring) > pow2(-norm)) return false;
  }
  return true;
}

// R^√ as a weighted set cover: blocks may overlap, and every feasible exponent
// of every block is a candidate, not only the largest.
inline std::optional<Q> rsqrt_cover(const std::function<bool(const prand::FiniteComplexity&)>& rule,
                                    const Set& f, std::int64_t cap) {
  const std::size_t n = f.size();
  const std::uint64_t full = (1ULL << n) - 1;
  std::vector<std::optional<Q>> cheapest(full + 1);
  for (std::uint64_t g = 1; g <= full; ++g) {
    for (std::int64_t e = -cap; e <= cap; ++e) {
      std::vector<prand::Entry> v;
      for (std::size_t i = 0; i < n; ++i) {
        if (g >> i & 1U) v.push_back({prand::BinaryString(f[i]), static_cast<std::int64_t>(f[i].size()) - e});
      }
      if (!rule(prand::FiniteComplexity(std::move(v)))) continue;
      Q c = pow2(-e);
      if (!cheapest[g] || c < *cheapest[g]) cheapest[g] = c;
    }
  }
  std::vector<std::optional<Q>> best(full + 1);
  best[0] = Q(0);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    for (std::uint64_t g = 1; g <= full; ++g) {
      if (!(g & mask) || !cheapest[g] || !best[mask & ~g]) continue;
      Q c = *cheapest[g] + *best[mask & ~g];
      if (!best[mask] || c < *best[mask]) best[mask] = c;
    }
  }
  return best[full];
}

// Literal per-pair sum of 2^(-d + |s| - h(s)), the unrepaired reading.
inline Q pair_sum(const HFn& h, const Pairs& r) {
  Q total = 0;
  for (const auto& [s, d] : r) total += pow2(-d + static_cast<std::int64_t>(s.size()) - h(s));
  return total;
}

// Least d per string.
inline std::map<Str, std::int64_t> graph(const Pairs& r) {
  std::map<Str, std::int64_t> g;
  for (const auto& [s, d] : r) {
    auto [it, fresh] = g.emplace(s, d);
    if (!fresh) it->second = std::min(it->second, d);
  }
  return g;
}

inline bool kp(const HFn& h, const Pairs& r) {
  Q total = 0;
  for (const auto& [s, d] : graph(r)) total += pow2(-d + static_cast<std::int64_t>(s.size()) - h(s));
  return total < 1;
}

inline bool ks(const HFn& h, const Pairs& r) {
  const auto g = graph(r);
  for (std::int64_t n = -5; n < 40; ++n) {
    std::int64_t count = 0;
    for (const auto& [s, d] : g) count += d - static_cast<std::int64_t>(s.size()) + h(s) < n ? 1 : 0;
    if (count > 0 && Q(count) >= pow2(n)) return false;
  }
  return true;
}

// Prefix-free variants: the condition on every prefix-free sub-ring.
inline bool ka(const HFn& h, const Pairs& r) {
  const auto g = graph(r);
  Set ring;
  for (const auto& [s, _] : g) ring.push_back(s);
  for (const auto& sub : all_subsets(ring)) {
    if (!prefix_free(sub)) continue;
    Q total = 0;
    for (const auto& s : sub) total += pow2(-g.at(s) + static_cast<std::int64_t>(s.size()) - h(s));
    if (total >= 1) return false;
  }
  return true;
}

inline bool kd(const HFn& h, const Pairs& r) {
  const auto g = graph(r);
  Set ring;
  for (const auto& [s, _] : g) ring.push_back(s);
  for (const auto& sub : all_subsets(ring)) {
    if (!prefix_free(sub)) continue;
    Pairs p;
    for (const auto& s : sub) p.emplace_back(s, g.at(s));
    if (!ks(h, p)) return false;
  }
  return true;
}

enum class Hat { member, not_member, bound_too_small };

// Kraft (prefix-free) or Hall counting (plain) on the clipped description lengths.
inline Hat hat(bool prefix_free_rule, const Pairs& s, std::int64_t bound) {
  bool clipped = false;
  std::vector<std::int64_t> lengths;
  for (const auto& [_, d] : graph(s)) {
    if (d < 0) return Hat::not_member;
    clipped = clipped || d > bound;
    lengths.push_back(std::min(d, bound));
  }
  bool ok = true;
  if (prefix_free_rule) {
    Q kraft = 0;
    for (auto l : lengths) kraft += pow2(-l);
    ok = kraft <= 1;
  } else {
    for (std::int64_t k = 0; k <= bound; ++k) {
      const auto c = std::count_if(lengths.begin(), lengths.end(), [&](std::int64_t l) { return l <= k; });
      ok = ok && Q(c) <= pow2(k + 1) - 1;
    }
  }
  if (ok) return Hat::member;
  return clipped ? Hat::bound_too_small : Hat::not_member;
}

}  // namespace oracle
