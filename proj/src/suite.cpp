#include "prand/suite.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "prand/duality.hpp"
#include "prand/levin_schnorr.hpp"
#include "prand/modes.hpp"
#include "prand/premeasure.hpp"
#include "prand/rules.hpp"

namespace prand {

namespace {

struct Scale {
  std::size_t universe_len;
  std::size_t k_max;
  ComplexitySpace rule_space;
  std::size_t test_universe_len;  // pool for the test-family checks
  std::size_t mode_string_len;
};

Scale scale_for(const std::string& name) {
  if (name == "tiny") return {2, 3, {universe(2), -1, 3, 2}, 1, 1};
  if (name == "small") return {3, 4, {universe(2), -2, 4, 3}, 2, 2};
  throw std::invalid_argument("unknown scale '" + name + "' (expected tiny or small)");
}

// h(s) = |s| + number of ones, tabulated on universe(len).
HSpec weighted_table(std::size_t len) {
  HSpec::Table t;
  for (const auto& s : universe(len)) {
    t[s] = s.size() + static_cast<std::uint64_t>(std::count(s.bits().begin(), s.bits().end(), '1'));
  }
  return HSpec::table(std::move(t), "ones-weighted");
}

TreeFamily sample_trees() {
  return {StringSet::of({"@", "0", "00", "000"}), StringSet::of({"@", "1", "10"}),
          StringSet::of({"@", "0", "01", "011"})};
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

SuiteResult run_suite(const SuiteOptions& options, std::ostream& out) {
  const Scale sc = scale_for(options.scale);
  const Exec exec = options.exec;
  const StringSet u = universe(sc.universe_len);
  const HSpec len = HSpec::length(), half = HSpec::scaled(1, 2), table = weighted_table(sc.universe_len);
  const ComplexitySamples samples = ComplexitySamples::enumerate(sc.rule_space);
  RuleCheckOptions rule_options;
  rule_options.seed = options.seed;
  rule_options.exec = exec;

  SuiteResult result;
  auto emit = [&](CheckReport r) {
    out << r << std::flush;
    result.reports.push_back(std::move(r));
  };

  for (const HSpec& h : {len, half, table}) {
    for (auto make : {dwt, pwt, dct, pct}) emit(check_premeasure_axioms(cached(make(h)), u, sc.k_max, exec));
  }
  emit(check_premeasure_axioms(sum(dwt(len), pct(half)), u, sc.k_max, exec));
  emit(check_premeasure_axioms(minimum(dct(len), pct(half)), u, sc.k_max, exec));
  emit(check_premeasure_axioms(tree_mixture(sample_trees()), u, sc.k_max, exec));
  emit(check_premeasure_axioms(star(dwt(half)), u, sc.k_max, exec));
  emit(check_premeasure_axioms(rsqrt(kp(len), options.cap), u, sc.k_max, exec));

  for (const HSpec& h : {len, half}) {
    for (auto make : {kp, ka, ks, kd}) emit(check_rule_axioms(make(h), samples, rule_options));
  }
  emit(check_rule_axioms(msqrt(cached(dwt(len))), samples, rule_options));
  if (options.inject_fixture) {
    // Not a rule: the shifted union of two 2-pair members has 4 pairs.
    emit(check_rule_axioms(custom_rule("fixture:size<=2", [](const FiniteComplexity& r) { return r.size() <= 2; }),
                           samples, rule_options));
  }

  emit(check_prop7(dwt(len), kp(len), u, sc.k_max, samples, options.cap, rule_options));
  emit(check_prop8(dwt(len), dwt(half), 0, u, sc.k_max, samples, exec));
  for (const auto& m : {dwt(len), dwt(half), pwt(len), dct(len), star(dwt(half))}) {
    emit(check_msqrtsqrt(m, u, sc.k_max, options.cap, exec));
  }
  for (const auto& r : {kp(len), ks(len)}) emit(check_rsqrtsqrt(r, samples, 4, options.cap, exec));

  const StringSet dual_u = universe(2);
  for (const HSpec& h : {len, half}) {
    emit(check_dual_pair(dwt(h), kp(h), dual_u, 3, 2, options.cap, exec));
    emit(check_dual_pair(pwt(h), ka(h), dual_u, 3, 2, options.cap, exec));
    emit(check_dual_pair(dct(h), ks(h), dual_u, 3, 2, options.cap, exec));
    emit(check_dual_pair(pct(h), kd(h), dual_u, 3, 2, options.cap, exec));
  }

  emit(check_witness_to_test(kp(len), rsqrt(kp(len), options.cap), samples, 3, exec));
  const auto pool = enumerate_tests(dwt(len), universe(sc.test_universe_len), 4);
  emit(check_test_to_witness(dwt(len), pool, exec));
  emit(check_merge_pairs(dwt(len), pool, 4, exec));

  emit(check_star_monotone(dwt(half), u, 3, exec));

  const auto modes = enumerate_modes(universe(sc.mode_string_len), 3);
  for (ModeRule mr : {ModeRule::prefix_free, ModeRule::plain}) {
    emit(check_mode_axioms(mr, modes, exec));
    emit(check_mode_hat(mr, modes, exec));
  }
  return result;
}

}  // namespace prand
