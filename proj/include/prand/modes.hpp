#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prand/complexity.hpp"
#include "prand/extint.hpp"
#include "prand/report.hpp"
#include "prand/strings.hpp"

namespace prand {

/// One (description, output) pair of a description mode.
struct ModePair {
  BinaryString desc;
  BinaryString output;

  friend auto operator<=>(const ModePair&, const ModePair&) = default;
  friend bool operator==(const ModePair&, const ModePair&) = default;
};

/// A finite description mode.
class Mode {
 public:
  using const_iterator = std::vector<ModePair>::const_iterator;

  Mode() = default;
  explicit Mode(std::vector<ModePair> pairs);
  static Mode of(std::initializer_list<std::pair<std::string_view, std::string_view>> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const_iterator begin() const noexcept { return pairs_.begin(); }
  const_iterator end() const noexcept { return pairs_.end(); }
  const ModePair& operator[](std::size_t i) const noexcept { return pairs_[i]; }

  StringSet descriptions() const;
  StringSet outputs() const;
  /// Longest description length, 0 for the empty mode.
  std::size_t max_desc_len() const;

  friend bool operator==(const Mode&, const Mode&) = default;

 private:
  std::vector<ModePair> pairs_;  // sorted, unique
};

enum class ModeRule { prefix_free, plain };

/// min{|desc| : (desc, s) in M}, or +inf.
ExtInt mode_k(const Mode& m, const BinaryString& s);
/// plain: no description has two outputs; prefix_free: additionally the descriptions form a prefix-free set.
bool mode_member(ModeRule rule, const Mode& r);
/// {(0τ, σ) : (τ,σ) ∈ r} ∪ {(1τ, σ) : (τ,σ) ∈ s}
Mode mode_combine(const Mode& r, const Mode& s);
/// {(σ, |τ|) : (τ,σ) ∈ r}
FiniteComplexity hat(const Mode& r);
/// {(σ, K^M(σ)) : σ ∈ outputs(M)}
FiniteComplexity mode_graph(const Mode& m);

enum class HatVerdict { member, not_member, bound_too_small };

struct HatResult {
  HatVerdict verdict = HatVerdict::not_member;
  Mode witness;  // set when verdict == member
};

/// Decides s ∈ R̂ = {s : ∃ r ∈ R with s ≺ hat(r)}, searching modes whose
/// descriptions are no longer than max_desc_len.
///
/// bound_too_small means no witness exists under the bound but some string of
/// s would admit a longer description than the bound allows.
HatResult hat_rule_member(ModeRule rule, const FiniteComplexity& s, std::size_t max_desc_len);

/// Every mode with at most max_pairs pairs whose descriptions and outputs lie in `strings`.
std::vector<Mode> enumerate_modes(const StringSet& strings, std::size_t max_pairs);

/// Subset closure and mode_combine closure over the members among `modes`.
CheckReport check_mode_axioms(ModeRule rule, const std::vector<Mode>& modes, Exec exec = Exec::parallel);

/// For every member M among `modes`: each subset of its K^M graph passes
/// hat_rule_member with bound max_desc_len(M), and for prefix_free the Kraft
/// sum of 2^-K^M is at most 1.
CheckReport check_mode_hat(ModeRule rule, const std::vector<Mode>& modes, Exec exec = Exec::parallel);

std::string to_string(const Mode& m);
std::string to_string(ModeRule rule);
std::string to_string(HatVerdict v);

}  // namespace prand
