#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "prand/complexity.hpp"
#include "prand/premeasure.hpp"
#include "prand/report.hpp"
#include "prand/sweep.hpp"

namespace prand {

/// A rule for complexity functions: a decidable family of finite complexities.
class Rule {
 public:
  class Node {
   public:
    virtual ~Node() = default;
    virtual bool contains(const FiniteComplexity& r) const = 0;
    virtual std::string describe() const = 0;
  };

  explicit Rule(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  bool operator()(const FiniteComplexity& r) const { return node_->contains(r); }
  std::string describe() const { return node_->describe(); }

 private:
  std::shared_ptr<const Node> node_;
};

inline bool member(const Rule& rule, const FiniteComplexity& r) { return rule(r); }

// The four example rules read r through graph_of(r): each string counts once,
// at its least d. On r with one pair per string this is the literal condition.

/// sum over (s,d) in r of 2^(-d + |s| - h(s)) < 1
Rule kp(HSpec h);
/// the kp condition on every sub-complexity whose ring is prefix-free
Rule ka(HSpec h);
/// #{(s,d) in r : d - |s| + h(s) < n} < 2^n for every n
Rule ks(HSpec h);
/// the ks condition on every sub-complexity whose ring is prefix-free
Rule kd(HSpec h);
Rule intersect(Rule a, Rule b);
/// Members of a, members of b, and every (t1 ∪ t2)^{+1} with t1 in a, t2 in b.
Rule join(Rule a, Rule b);
Rule custom_rule(std::string name, std::function<bool(const FiniteComplexity&)> fn);

/// join() decomposes over 2-colorings; refuse beyond this many pairs.
inline constexpr std::size_t kJoinPairLimit = 20;

/// Bounded sample space: ring within `strings`, d in [d_lo, d_hi], at most max_size pairs.
struct ComplexitySpace {
  StringSet strings;
  std::int64_t d_lo = -2;
  std::int64_t d_hi = 4;
  std::size_t max_size = 3;
};

/// A list of finite complexities indexed over a shared pair alphabet.
///
/// When the alphabet has at most 64 pairs every sample also carries a bitmask,
/// which turns the ≺ test into a mask inclusion.
class ComplexitySamples {
 public:
  explicit ComplexitySamples(std::vector<FiniteComplexity> items);

  /// Every complexity in the space, ordered by size then alphabet mask.
  static ComplexitySamples enumerate(const ComplexitySpace& space);

  std::size_t size() const noexcept { return items_.size(); }
  const FiniteComplexity& operator[](std::size_t i) const noexcept { return items_[i]; }
  const std::vector<FiniteComplexity>& items() const noexcept { return items_; }

  /// s ≺ r for items i (as s) and j (as r).
  bool stronger(std::size_t s, std::size_t r) const;

 private:
  void index();

  std::vector<FiniteComplexity> items_;
  std::vector<Entry> alphabet_;
  bool masked_ = false;
  std::vector<std::uint64_t> masks_;      // pairs of item i
  std::vector<std::uint64_t> dominated_;  // alphabet pairs (s,d) with K^item(s) <= d
};

/// Membership flags for every sample.
std::vector<char> classify(const Rule& rule, const ComplexitySamples& samples, Exec exec);

struct RuleCheckOptions {
  /// Lemma-1 lists of length 2 and 3 are exhaustive up to this many; above it a
  /// seeded uniform sample of this size is drawn instead.
  std::size_t lemma_budget = 200000;
  std::uint64_t seed = 20120118;
  Exec exec = Exec::parallel;
};

/// Checks ∅ ∈ R, ≺-closure over sampled pairs, (r ∪ s)^{+1} ∈ R over sampled
/// member pairs, and r1^{+1} ∪ ... ∪ rn^{+n} ∈ R for member lists up to length 3.
CheckReport check_rule_axioms(const Rule& rule, const ComplexitySamples& samples,
                              const RuleCheckOptions& options = {});

}  // namespace prand
