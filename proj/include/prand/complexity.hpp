#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prand/extint.hpp"
#include "prand/strings.hpp"

namespace prand {

/// One pair (sigma, d) of a finite complexity; d may be negative.
struct Entry {
  BinaryString sigma;
  std::int64_t d = 0;

  friend auto operator<=>(const Entry&, const Entry&) = default;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A finite set of (string, integer) pairs, read as K(s) = least paired value.
class FiniteComplexity {
 public:
  using const_iterator = std::vector<Entry>::const_iterator;

  FiniteComplexity() = default;
  explicit FiniteComplexity(std::vector<Entry> pairs);
  static FiniteComplexity of(std::initializer_list<std::pair<std::string_view, std::int64_t>> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const_iterator begin() const noexcept { return pairs_.begin(); }
  const_iterator end() const noexcept { return pairs_.end(); }
  const Entry& operator[](std::size_t i) const noexcept { return pairs_[i]; }
  const std::vector<Entry>& pairs() const noexcept { return pairs_; }

  friend bool operator==(const FiniteComplexity&, const FiniteComplexity&) = default;
  friend auto operator<=>(const FiniteComplexity& a, const FiniteComplexity& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  std::vector<Entry> pairs_;  // sorted by (sigma shortlex, d), unique
};

/// min{d : (s,d) in r}, or +inf.
ExtInt k_of(const FiniteComplexity& r, const BinaryString& s);
/// Projection to first components.
StringSet ring(const FiniteComplexity& r);
/// Every d increased by i.
FiniteComplexity shift(const FiniteComplexity& r, std::int64_t i);
/// min{|s| - d}, or +inf for the empty set.
ExtInt norm(const FiniteComplexity& r);
/// s ≺ r: every (sigma,d) in s has some (sigma,d') in r with d' <= d.
bool stronger(const FiniteComplexity& s, const FiniteComplexity& r);
/// {(s, |s| - e) : s in F}.
FiniteComplexity uniform(const StringSet& f, std::int64_t e);
FiniteComplexity united(const FiniteComplexity& a, const FiniteComplexity& b);
/// r1^{+1} ∪ ... ∪ rn^{+n}.
FiniteComplexity union_shift(const std::vector<FiniteComplexity>& rs);
/// Finite analogue of the optimal complexity: the union of A_i^{+i}, i = 1..n.
FiniteComplexity optimal_merge(const std::vector<FiniteComplexity>& as);
/// {(s, K^r(s)) : s in ring(r)}: one pair per string, at its least value.
FiniteComplexity graph_of(const FiniteComplexity& r);

/// "{(0,1),(@,-2)}"
std::string to_string(const FiniteComplexity& r);

}  // namespace prand
