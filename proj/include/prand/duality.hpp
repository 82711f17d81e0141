#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "prand/complexity.hpp"
#include "prand/dyadic.hpp"
#include "prand/premeasure.hpp"
#include "prand/report.hpp"
#include "prand/rules.hpp"

namespace prand {

inline constexpr std::int64_t kDefaultExponentCap = 32;
/// Set partitions are enumerated exhaustively; Bell(8) = 4140 is the ceiling.
inline constexpr std::size_t kPartitionLimit = 8;

// ------------------------------------------------------------ measure -> rule

/// r ∈ m^√ by the level-set criterion: for every norm level v realized in r,
/// m(ring{(s,d) ∈ r : |s| - d >= v}) <= 2^-v.
bool sqrt_rule_member(const PreMeasure& m, const FiniteComplexity& r);

/// The rule m^√ as a Rule handle.
Rule msqrt(PreMeasure m);

// ------------------------------------------------------------ rule -> measure

/// Largest e in [-cap, cap] with uniform(G, e) ∈ R.
struct EMax {
  enum class Status { found, none, at_cap };
  Status status = Status::none;
  std::int64_t value = 0;  // meaningful for found and at_cap

  std::string str() const;
};

EMax e_max(const Rule& rule, const StringSet& g, std::int64_t cap = kDefaultExponentCap);

/// R^√(F) with the partition that attains it.
struct SqrtValue {
  Dyadic value;
  bool cap_hit = false;             // some chosen block hit the exponent cap
  std::vector<StringSet> blocks;    // optimal partition, first in canonical order
  std::vector<std::int64_t> exponents;
};

/// R^√ evaluator: min over set partitions {G_j} of F of sum_j 2^-e_max(G_j).
///
/// Uniform witnesses reach the cover infimum: any cover element r can be
/// replaced by uniform(ring(r) ∩ F, norm(r)) ≺ r, and overlapping covers never
/// beat partitions because shrinking a block cannot lower its e_max. e_max
/// values are memoized per block; the object is safe to share across threads.
class SqrtPremeasure {
 public:
  explicit SqrtPremeasure(Rule rule, std::int64_t cap = kDefaultExponentCap);

  const Rule& rule() const { return rule_; }
  std::int64_t cap() const { return cap_; }

  EMax block_exponent(const StringSet& g) const;
  /// Throws ResourceLimitError when |F| > kPartitionLimit or no partition fits within the cap.
  SqrtValue evaluate(const StringSet& f) const;

 private:
  struct Memo;
  Rule rule_;
  std::int64_t cap_;
  std::shared_ptr<Memo> memo_;
};

SqrtValue sqrt_premeasure_eval(const Rule& rule, const StringSet& f, std::int64_t cap = kDefaultExponentCap);

/// R^√ as a PreMeasure handle.
PreMeasure rsqrt(Rule rule, std::int64_t cap = kDefaultExponentCap);

// ------------------------------------------------------------ checks

/// Both halves of "√ maps rules to pre-measures and pre-measures to rules".
CheckReport check_prop7(const PreMeasure& m, const Rule& rule, const StringSet& u, std::size_t k_max,
                        const ComplexitySamples& samples, std::int64_t cap = kDefaultExponentCap,
                        const RuleCheckOptions& options = {});

/// If m <= 2^j * k on every tested F, every sampled r ∈ k^√ has r^{+j} ∈ m^√.
/// The premise is reported as a field; the report fails on conclusion violations.
CheckReport check_prop8(const PreMeasure& m, const PreMeasure& k, std::int64_t j, const StringSet& u,
                        std::size_t k_max, const ComplexitySamples& samples, Exec exec = Exec::parallel);

/// m <= m^√√ <= 2m for all F ⊆ U with |F| <= k_max.
CheckReport check_msqrtsqrt(const PreMeasure& m, const StringSet& u, std::size_t k_max,
                            std::int64_t cap = kDefaultExponentCap, Exec exec = Exec::parallel);

/// (a) every sampled r ∈ R lies in R^√√; (b) every sampled r ∈ R^√√ has some
/// t ∈ R with r ≺ t^{-c}, c <= c_search. Field max_c holds the empirical constant.
CheckReport check_rsqrtsqrt(const Rule& rule, const ComplexitySamples& samples, std::int64_t c_search,
                            std::int64_t cap = kDefaultExponentCap, Exec exec = Exec::parallel);

/// Least c >= 0 with r ≺ t^{-c} for some uniform-union candidate t ∈ R over
/// ring(r) (or t = r when r ∈ R); -1 when no candidate is a member.
std::int64_t least_shift_constant(const Rule& rule, const SqrtPremeasure& sqrt_of_rule,
                                  const FiniteComplexity& r);

/// Exact ratio num/den of two dyadics (den > 0).
struct Ratio {
  Dyadic num;
  Dyadic den = Dyadic::one();

  /// True when num/den is itself a dyadic.
  bool is_dyadic() const;
  /// Smallest k with num/den <= 2^k.
  std::int64_t ceil_log2() const;
  std::string str() const;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return (a <=> b) == 0; }
};

struct DualRatio {
  Ratio measure_over_rule;  // max m(F) / R^√(F)
  Ratio rule_over_measure;  // max R^√(F) / m(F)
  std::size_t tested = 0;   // nonempty F with both values nonzero
  std::size_t both_zero = 0;
  std::vector<std::string> one_sided_zero;  // duality violations
  bool cap_hit = false;
};

DualRatio dual_ratio(const PreMeasure& m, const Rule& rule, const StringSet& u, std::size_t k_max,
                     std::int64_t cap = kDefaultExponentCap, Exec exec = Exec::parallel);

/// dual_ratio as a check: passes when no F has exactly one of m(F), R^√(F)
/// zero and both ratio bounds are at most 2^bound_log2.
CheckReport check_dual_pair(const PreMeasure& m, const Rule& rule, const StringSet& u, std::size_t k_max,
                            std::int64_t bound_log2 = 2, std::int64_t cap = kDefaultExponentCap,
                            Exec exec = Exec::parallel);

}  // namespace prand
