#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "prand/dyadic.hpp"
#include "prand/report.hpp"
#include "prand/strings.hpp"
#include "prand/sweep.hpp"

namespace prand {

/// A recursive weight function h: strings -> naturals.
class HSpec {
 public:
  using Table = std::map<BinaryString, std::uint64_t>;

  /// h(s) = |s|.
  static HSpec length();
  /// h(s) = ceil(p * |s| / q). Requires q > 0.
  static HSpec scaled(std::uint64_t p, std::uint64_t q);
  /// h given by a finite table; evaluating outside it throws MissingHError.
  static HSpec table(Table entries, std::string label = "table");

  std::int64_t operator()(const BinaryString& s) const;
  bool is_total_on(const StringSet& u) const;
  std::string describe() const;

 private:
  enum class Kind { length, scaled, table };
  Kind kind_ = Kind::length;
  std::uint64_t p_ = 1, q_ = 1;
  std::shared_ptr<const Table> table_;
  std::string label_;
};

/// A pre-measure given as an evaluable expression.
///
/// Handles are cheap to copy and immutable; nodes are shared.
class PreMeasure {
 public:
  class Node {
   public:
    virtual ~Node() = default;
    virtual Dyadic eval(const StringSet& f) const = 0;
    virtual std::string describe() const = 0;
  };

  explicit PreMeasure(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  Dyadic operator()(const StringSet& f) const { return node_->eval(f); }
  std::string describe() const { return node_->describe(); }
  const std::shared_ptr<const Node>& node() const { return node_; }

 private:
  std::shared_ptr<const Node> node_;
};

inline Dyadic eval(const PreMeasure& m, const StringSet& f) { return m(f); }

/// Ordered finite list of trees; each tree is a prefix-closed string set.
using TreeFamily = std::vector<StringSet>;

/// True iff every prefix of every member is a member.
bool is_prefix_closed(const StringSet& t);

/// sum over s in F of 2^-h(s)
PreMeasure dwt(HSpec h);
/// max of dwt over prefix-free subsets
PreMeasure pwt(HSpec h);
/// max over n of #{s in F : h(s) < n} / 2^n
PreMeasure dct(HSpec h);
/// max of dct over prefix-free subsets
PreMeasure pct(HSpec h);
PreMeasure sum(PreMeasure a, PreMeasure b);
PreMeasure minimum(PreMeasure a, PreMeasure b);
/// sum over i of 2^-i * [F meets trees[i]]. Throws FormatError on a tree that is not prefix-closed.
PreMeasure tree_mixture(TreeFamily trees);
/// Cheapest value over prefix covers: min over C with F ≺ C of m(C).
PreMeasure star(PreMeasure m);

/// Wraps an arbitrary function; used for fixtures that are not pre-measures.
PreMeasure custom(std::string name, std::function<Dyadic(const StringSet&)> fn);
/// Thread-safe memoization of m. Value-transparent.
PreMeasure cached(PreMeasure m);

/// Hard limit on the number of prefix-choice candidates star() will enumerate.
inline constexpr std::uint64_t kStarCandidateLimit = std::uint64_t{1} << 22;

/// Checks m(∅)=0, monotonicity and subadditivity over all F1, F2 ⊆ U with |Fi| <= k_max.
CheckReport check_premeasure_axioms(const PreMeasure& m, const StringSet& u, std::size_t k_max,
                                    Exec exec = Exec::parallel);

/// A ≺ B (every member of A has a prefix in B) implies m*(A) <= m*(B), over all
/// A, B ⊆ U with |A|, |B| <= k_max. m is the base measure, not its star.
CheckReport check_star_monotone(const PreMeasure& m, const StringSet& u, std::size_t k_max,
                                Exec exec = Exec::parallel);

/// Values of m on U.select(mask) for each mask.
std::vector<Dyadic> evaluate_subsets(const PreMeasure& m, const StringSet& u,
                                     const std::vector<std::uint64_t>& masks, Exec exec);

}  // namespace prand
