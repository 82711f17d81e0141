#include "prand/levin_schnorr.hpp"

#include <algorithm>
#include <map>

#include "prand/combinatorics.hpp"
#include "prand/duality.hpp"
#include "prand/errors.hpp"

namespace prand {

const StringSet& TestFamily::level(std::size_t i) const {
  static const StringSet kEmpty;
  return i < levels.size() ? levels[i] : kEmpty;
}

TestFamily tests_from_witness(const FiniteComplexity& r, std::size_t i_max) {
  std::vector<std::vector<BinaryString>> members(i_max + 1);
  for (const auto& e : graph_of(r)) {
    const std::int64_t slack = static_cast<std::int64_t>(e.sigma.size()) - e.d;
    for (std::int64_t i = 0; i <= slack && i <= static_cast<std::int64_t>(i_max); ++i) {
      members[static_cast<std::size_t>(i)].push_back(e.sigma);
    }
  }
  TestFamily t;
  for (auto& v : members) t.levels.emplace_back(std::move(v));
  return t;
}

FiniteComplexity witness_from_tests(const TestFamily& t) {
  std::vector<Entry> out;
  for (std::size_t i = 0; 2 * i < t.levels.size(); ++i) {
    for (const auto& s : t.levels[2 * i]) {
      out.push_back({s, static_cast<std::int64_t>(s.size()) - static_cast<std::int64_t>(i)});
    }
  }
  return FiniteComplexity(std::move(out));
}

CheckReport verify_test(const PreMeasure& m, const TestFamily& t) {
  CheckReport report("verify-test");
  report.set("m", m.describe()).set("imax", t.i_max());
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    const Dyadic v = m(t.levels[i]);
    const Dyadic bound = Dyadic::pow2(-static_cast<std::int64_t>(i));
    if (bound < v) {
      report.fail("level " + std::to_string(i) + " " + to_string(t.levels[i]) + " m=" + v.str() + " > " +
                  bound.str());
    }
  }
  return report;
}

CheckReport verify_witness(const PreMeasure& m, const FiniteComplexity& a, std::size_t subset_bound) {
  CheckReport report("verify-witness");
  report.set("m", m.describe()).set("pairs", a.size());
  if (!sqrt_rule_member(m, a)) report.fail("A=" + to_string(a) + " not in m^sqrt");
  if (a.size() <= 20) {
    const auto masks = subsets_up_to(a.size(), std::min(subset_bound, a.size()));
    std::size_t checked = 0;
    for (auto mask : masks) {
      std::vector<Entry> sub;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (mask >> i & 1U) sub.push_back(a[i]);
      }
      const FiniteComplexity s(std::move(sub));
      ++checked;
      if (!sqrt_rule_member(m, s)) report.fail("subset " + to_string(s) + " not in m^sqrt");
    }
    report.set("subsets_checked", checked);
  } else {
    report.set("subsets_checked", "skipped");
  }
  return report;
}

TestFamily merge_universal(const std::vector<TestFamily>& tests, std::size_t i_max) {
  TestFamily merged;
  for (std::size_t i = 0; i <= i_max; ++i) {
    StringSet level;
    for (std::size_t j = 0; j < tests.size(); ++j) level = level.united(tests[j].level(i + j + 1));
    merged.levels.push_back(std::move(level));
  }
  return merged;
}

DeficiencyProfile deficiency_profile(const BinaryString& x, const FiniteComplexity& r) {
  // K^r restricted to prefixes of x, keyed by prefix length.
  std::map<std::size_t, std::int64_t> k;
  for (const auto& e : r) {
    if (!is_prefix(e.sigma, x)) continue;
    auto [it, fresh] = k.emplace(e.sigma.size(), e.d);
    if (!fresh) it->second = std::min(it->second, e.d);
  }
  DeficiencyProfile p;
  const std::size_t n_max = x.size();
  p.entries.assign(n_max, ExtInt::neg_infinity());
  for (const auto& [n, d] : k) {
    if (n >= 1) p.entries[n - 1] = static_cast<std::int64_t>(n) - d;
  }
  for (const auto& e : p.entries) {
    if (e.is_finite()) p.max_finite = std::max(p.max_finite, e);
  }
  if (n_max > 0) {
    const std::size_t tail = std::max<std::size_t>(1, n_max / 4);
    p.tail_min = *std::min_element(p.entries.end() - static_cast<std::ptrdiff_t>(tail), p.entries.end());
  }
  return p;
}

std::vector<TestFamily> enumerate_tests(const PreMeasure& m, const StringSet& u, std::size_t i_max) {
  if (u.size() > 20) throw BoundedUniverseError("enumerate_tests supports at most 20 strings");
  const std::uint64_t n_sets = std::uint64_t{1} << u.size();
  std::vector<Dyadic> values(n_sets);
  for (std::uint64_t mask = 0; mask < n_sets; ++mask) values[mask] = m(u.select(mask));
  std::vector<std::vector<StringSet>> options(i_max + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i <= i_max; ++i) {
    const Dyadic bound = Dyadic::pow2(-static_cast<std::int64_t>(i));
    for (std::uint64_t mask = 0; mask < n_sets; ++mask) {
      if (values[mask] <= bound) options[i].push_back(u.select(mask));
    }
    total *= options[i].size();
    if (total > 10'000'000) throw ResourceLimitError("enumerate_tests: more than 10^7 families");
  }
  std::vector<TestFamily> out;
  out.reserve(total);
  std::vector<std::size_t> digit(i_max + 1, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    TestFamily t;
    for (std::size_t i = 0; i <= i_max; ++i) t.levels.push_back(options[i][digit[i]]);
    out.push_back(std::move(t));
    for (std::size_t i = i_max + 1; i-- > 0;) {
      if (++digit[i] < options[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

CheckReport check_witness_to_test(const Rule& rule, const PreMeasure& m, const ComplexitySamples& samples,
                                  std::size_t i_max, Exec exec) {
  CheckReport report("witness-to-test");
  report.set("rule", rule.describe()).set("m", m.describe()).set("imax", i_max);
  const auto in_rule = classify(rule, samples, exec);
  report.set("members", static_cast<std::size_t>(std::count(in_rule.begin(), in_rule.end(), 1)));
  report.absorb("level", collect_violations(samples.size(), exec, CheckReport::kMaxWitnesses,
                                            [&](std::size_t i) -> std::optional<std::string> {
                                              if (!in_rule[i]) return std::nullopt;
                                              const CheckReport v = verify_test(m, tests_from_witness(samples[i], i_max));
                                              if (v.pass) return std::nullopt;
                                              return "r=" + to_string(samples[i]) + " " + v.witnesses.front();
                                            }));
  return report;
}

CheckReport check_test_to_witness(const PreMeasure& m, const std::vector<TestFamily>& tests, Exec exec) {
  CheckReport report("test-to-witness");
  report.set("m", m.describe()).set("tests", tests.size());
  report.absorb("witness", collect_violations(tests.size(), exec, CheckReport::kMaxWitnesses,
                                              [&](std::size_t i) -> std::optional<std::string> {
                                                const CheckReport v = verify_witness(m, witness_from_tests(tests[i]));
                                                if (v.pass) return std::nullopt;
                                                return to_string(tests[i]) + " " + v.witnesses.front();
                                              }));
  return report;
}

CheckReport check_merge_pairs(const PreMeasure& m, const std::vector<TestFamily>& tests, std::size_t i_max,
                              Exec exec) {
  CheckReport report("merge-universal");
  report.set("m", m.describe()).set("tests", tests.size()).set("pairs", tests.size() * tests.size());
  const std::size_t n = tests.size();
  report.absorb("merge", collect_violations(n, exec, CheckReport::kMaxWitnesses,
                                            [&](std::size_t i) -> std::optional<std::string> {
                                              for (std::size_t j = 0; j < n; ++j) {
                                                const TestFamily merged = merge_universal({tests[i], tests[j]}, i_max);
                                                const CheckReport v = verify_test(m, merged);
                                                if (!v.pass) {
                                                  return "T1: " + to_string(tests[i]) + " T2: " + to_string(tests[j]) +
                                                         " " + v.witnesses.front();
                                                }
                                              }
                                              return std::nullopt;
                                            }));
  return report;
}

std::string to_string(const TestFamily& t) {
  std::string out;
  for (std::size_t i = 0; i < t.levels.size(); ++i) {
    if (i) out += ' ';
    out += "U" + std::to_string(i) + "=" + to_string(t.levels[i]);
  }
  return out;
}

}  // namespace prand
