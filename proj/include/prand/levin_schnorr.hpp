#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "prand/complexity.hpp"
#include "prand/extint.hpp"
#include "prand/premeasure.hpp"
#include "prand/report.hpp"
#include "prand/rules.hpp"
#include "prand/strings.hpp"

namespace prand {

/// Levels U_0..U_imax of a finite test. Being an m-test is checked, never assumed.
struct TestFamily {
  std::vector<StringSet> levels;

  std::size_t i_max() const { return levels.empty() ? 0 : levels.size() - 1; }
  /// Missing levels read as ∅.
  const StringSet& level(std::size_t i) const;

  friend bool operator==(const TestFamily&, const TestFamily&) = default;
};

/// U_i = {s ∈ ring(r) : K^r(s) <= |s| - i}, i = 0..i_max.
TestFamily tests_from_witness(const FiniteComplexity& r, std::size_t i_max);

/// {(s, |s| - i) : s ∈ U_{2i}}; odd levels are dropped.
FiniteComplexity witness_from_tests(const TestFamily& t);

/// m(U_i) <= 2^-i at every defined level.
CheckReport verify_test(const PreMeasure& m, const TestFamily& t);

/// A ∈ m^√ by the level-set criterion, cross-checked on every subset of A of
/// size <= subset_bound (when |A| <= 20).
CheckReport verify_witness(const PreMeasure& m, const FiniteComplexity& a, std::size_t subset_bound = 3);

/// levels(i) = ∪_j tests[j].levels(i + j + 1), i = 0..i_max.
TestFamily merge_universal(const std::vector<TestFamily>& tests, std::size_t i_max);

struct DeficiencyProfile {
  std::vector<ExtInt> entries;  // entries[n-1] = n - K^r(X↾n); -inf where K is undefined
  ExtInt max_finite = ExtInt::neg_infinity();
  ExtInt tail_min = ExtInt::neg_infinity();  // over the last quarter of n
};

DeficiencyProfile deficiency_profile(const BinaryString& x, const FiniteComplexity& r);

/// Every m-test with levels 0..i_max drawn from subsets of U.
std::vector<TestFamily> enumerate_tests(const PreMeasure& m, const StringSet& u, std::size_t i_max);

/// For every sampled r ∈ R, tests_from_witness(r, i_max) is an m-test.
CheckReport check_witness_to_test(const Rule& rule, const PreMeasure& m, const ComplexitySamples& samples,
                                  std::size_t i_max, Exec exec = Exec::parallel);

/// For every given m-test T, witness_from_tests(T) lies in m^√.
CheckReport check_test_to_witness(const PreMeasure& m, const std::vector<TestFamily>& tests,
                                  Exec exec = Exec::parallel);

/// merge_universal({T1, T2}, i_max) is an m-test for every ordered pair of given m-tests.
CheckReport check_merge_pairs(const PreMeasure& m, const std::vector<TestFamily>& tests, std::size_t i_max,
                              Exec exec = Exec::parallel);

std::string to_string(const TestFamily& t);

}  // namespace prand
