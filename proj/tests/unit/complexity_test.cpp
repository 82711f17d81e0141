#include <doctest.h>

#include "oracles.hpp"
#include "prand/complexity.hpp"
#include "prand/errors.hpp"
#include "prand/rules.hpp"

using namespace prand;

namespace {

const HSpec kLen = HSpec::length();
const HSpec kHalf = HSpec::scaled(1, 2);

FiniteComplexity fc(std::initializer_list<std::pair<std::string_view, std::int64_t>> p) {
  return FiniteComplexity::of(p);
}

}  // namespace

TEST_SUITE("complexity") {
  TEST_CASE("k_of, ring, norm") {
    CHECK(k_of(fc({{"0", 2}, {"0", 5}}), BinaryString("0")) == ExtInt(2));
    CHECK(k_of(FiniteComplexity{}, BinaryString("0")).is_pos_inf());
    CHECK(k_of(fc({{"1", -1}}), BinaryString("1")) == ExtInt(-1));
    CHECK(ring(fc({{"0", 1}, {"0", 3}, {"11", 0}})) == StringSet::of({"0", "11"}));
    CHECK(ring(fc({{"@", 0}})) == StringSet::of({"@"}));
    CHECK(norm(fc({{"00", 1}, {"010", 3}})) == ExtInt(0));
    CHECK(norm(FiniteComplexity{}).is_pos_inf());
    CHECK(norm(fc({{"0", -1}})) == ExtInt(2));
  }

  TEST_CASE("shift, uniform, union_shift") {
    CHECK(shift(fc({{"0", 1}}), 2) == fc({{"0", 3}}));
    CHECK(shift(fc({{"0", 1}}), -2) == fc({{"0", -1}}));
    CHECK(uniform(StringSet::of({"00", "01"}), 0) == fc({{"00", 2}, {"01", 2}}));
    CHECK(uniform(StringSet{}, 3).empty());
    CHECK(uniform(StringSet::of({"0"}), 1) == fc({{"0", 0}}));
    CHECK(union_shift({fc({{"0", 1}}), fc({{"0", 1}})}) == fc({{"0", 2}, {"0", 3}}));
    CHECK(union_shift({}).empty());
    CHECK(union_shift({fc({{"0", 1}}), fc({{"1", 0}})}) == fc({{"0", 2}, {"1", 2}}));
    CHECK(optimal_merge({fc({{"0", 1}}), fc({{"00", 1}})}) == fc({{"0", 2}, {"00", 3}}));
    CHECK(optimal_merge({fc({{"1", 4}})}) == fc({{"1", 5}}));
    CHECK(to_string(fc({{"@", -2}, {"0", 1}})) == "{(@,-2),(0,1)}");
    CHECK(graph_of(fc({{"0", 3}, {"0", 1}, {"1", 2}})) == fc({{"0", 1}, {"1", 2}}));
  }

  TEST_CASE("stronger") {
    CHECK(stronger(fc({{"0", 3}}), fc({{"0", 2}})));
    CHECK_FALSE(stronger(fc({{"0", 1}}), fc({{"0", 2}})));
    CHECK(stronger(FiniteComplexity{}, fc({{"1", 0}})));
    const auto samples = ComplexitySamples::enumerate({universe(1), -1, 1, 2});
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& r = samples[i];
      CHECK(stronger(r, r));
      CHECK(stronger(shift(r, 1), r));
      CHECK(stronger(r, shift(r, -1)));
      if (!r.empty()) CHECK(norm(shift(r, 2)) == ExtInt(norm(r).value() - 2));
      for (std::size_t j = 0; j < samples.size(); ++j) {
        CHECK(samples.stronger(i, j) == stronger(r, samples[j]));
        if (!stronger(r, samples[j])) continue;
        for (std::size_t k = 0; k < samples.size(); ++k) {
          if (stronger(samples[j], samples[k])) CHECK(stronger(r, samples[k]));
        }
      }
    }
  }

  TEST_CASE("norm and ring do not determine ≺ beyond uniform complexities") {
    // Same ring and ||s|| <= ||r||, yet s is not stronger-than r.
    const auto s = fc({{"00000", 2}}), r = fc({{"00000", 5}});
    CHECK(ring(s) == ring(r));
    CHECK(norm(s) > norm(r));
    CHECK(stronger(r, s));
    CHECK_FALSE(stronger(s, r));
    // For uniform r, ring inclusion with a smaller norm does imply ≺.
    const StringSet u = universe(2);
    for (std::uint64_t a = 1; a < 128; ++a) {
      for (std::uint64_t b = 1; b < 128; b += 3) {
        if ((a & ~b) != 0) continue;
        for (std::int64_t e1 = -2; e1 <= 2; ++e1) {
          for (std::int64_t e2 = e1; e2 <= 2; ++e2) {
            CHECK(stronger(uniform(u.select(a), e1), uniform(u.select(b), e2)));
          }
        }
      }
    }
  }

  TEST_CASE("uniformization: uniform(F, e) ≺ r for F ⊆ ring(r), e <= norm(r)") {
    const auto samples = ComplexitySamples::enumerate({universe(2), -1, 2, 2});
    for (const auto& r : samples.items()) {
      if (r.empty()) continue;
      CHECK(stronger(uniform(ring(r), norm(r).value()), r));
    }
  }
}

TEST_SUITE("rules") {
  TEST_CASE("documented memberships") {
    CHECK(kp(kLen)(fc({{"0", 1}})));
    CHECK_FALSE(kp(kLen)(fc({{"0", 0}})));
    CHECK_FALSE(kp(kLen)(fc({{"0", 1}, {"1", 1}})));
    CHECK(ka(kLen)(fc({{"0", 1}, {"00", 1}})));
    CHECK_FALSE(kp(kLen)(fc({{"0", 1}, {"00", 1}})));
    CHECK_FALSE(ks(kLen)(fc({{"0", 0}, {"1", 0}})));
    CHECK(ks(kLen)(fc({{"0", 0}})));
    for (const auto& r : {kp(kLen), ka(kHalf), ks(kLen), kd(kHalf)}) CHECK(r(FiniteComplexity{}));
  }

  TEST_CASE("rules agree with brute force on a complexity space") {
    const auto samples = ComplexitySamples::enumerate({universe(2), -2, 3, 3});
    for (const auto& [h, oh] : {std::pair{kLen, oracle::len()}, std::pair{kHalf, oracle::half()}}) {
      const Rule p = kp(h), a = ka(h), s = ks(h), d = kd(h);
      for (const auto& r : samples.items()) {
        const auto o = oracle::pairs(r);
        CHECK(p(r) == oracle::kp(oh, o));
        CHECK(a(r) == oracle::ka(oh, o));
        CHECK(s(r) == oracle::ks(oh, o));
        CHECK(d(r) == oracle::kd(oh, o));
      }
    }
  }

  TEST_CASE("the literal per-pair sum is not closed under ≺") {
    // Extra weaker pairs for a string already present add weight under the
    // literal sum; this is why the rules are read through graph_of.
    const auto r = fc({{"@", 2}, {"0", 1}});
    const auto s = fc({{"@", 2}, {"0", 1}, {"0", 2}});
    CHECK(stronger(s, r));
    CHECK(oracle::pair_sum(oracle::len(), oracle::pairs(r)) < 1);
    CHECK(oracle::pair_sum(oracle::len(), oracle::pairs(s)) >= 1);
    CHECK(kp(kLen)(s));
    const Rule literal = custom_rule("kp-literal", [](const FiniteComplexity& c) {
      return oracle::pair_sum(oracle::len(), oracle::pairs(c)) < 1;
    });
    const auto report = check_rule_axioms(literal, ComplexitySamples::enumerate({universe(1), -1, 3, 3}));
    CHECK_FALSE(report.pass);
    CHECK(report.witnesses.front().find("closure") != std::string::npos);
  }

  TEST_CASE("rule axioms hold for the built-in rules") {
    const auto samples = ComplexitySamples::enumerate({universe(2), -1, 3, 2});
    for (const auto& r : {kp(kLen), ka(kLen), ks(kHalf), kd(kHalf), intersect(kp(kLen), ks(kHalf))}) {
      const auto rep = check_rule_axioms(r, samples);
      CHECK_MESSAGE(rep.pass, rep.line());
    }
  }

  TEST_CASE("rule axioms reject a size-bounded family on the union axiom") {
    const Rule bad = custom_rule("size<=2", [](const FiniteComplexity& r) { return r.size() <= 2; });
    const auto rep = check_rule_axioms(bad, ComplexitySamples::enumerate({universe(1), 0, 2, 2}));
    CHECK_FALSE(rep.pass);
    bool union_witness = false;
    for (const auto& w : rep.witnesses) union_witness = union_witness || w.find("union") != std::string::npos;
    CHECK(union_witness);
  }

  TEST_CASE("join decomposes shifted unions") {
    const Rule j = join(kp(kLen), ks(kLen));
    CHECK(j.describe() == "or(kp(len),ks(len))");
    const auto a = fc({{"0", 1}}), b = fc({{"1", 0}});
    CHECK(kp(kLen)(a));
    CHECK(ks(kLen)(b));
    const auto u = shift(united(a, b), 1);
    CHECK(j(u));
    CHECK(j(a));
    CHECK_FALSE(j(fc({{"0", -3}})));
    CHECK(intersect(kp(kLen), ks(kLen)).describe() == "and(kp(len),ks(len))");
  }

  TEST_CASE("serial and parallel rule checks agree") {
    const auto samples = ComplexitySamples::enumerate({universe(1), -1, 2, 3});
    RuleCheckOptions serial, parallel;
    serial.exec = Exec::serial;
    parallel.exec = Exec::parallel;
    serial.lemma_budget = parallel.lemma_budget = 5000;
    const Rule bad = custom_rule("size<=2", [](const FiniteComplexity& r) { return r.size() <= 2; });
    for (const auto& r : {kd(kLen), bad}) {
      const auto a = check_rule_axioms(r, samples, serial), b = check_rule_axioms(r, samples, parallel);
      CHECK(a.line() == b.line());
      CHECK(a.witnesses == b.witnesses);
    }
  }

  TEST_CASE("sample space guards") {
    CHECK_THROWS_AS(ComplexitySamples::enumerate({universe(3), -2, 4, 2}), BoundedUniverseError);
    CHECK(ComplexitySamples::enumerate({universe(2), -2, 4, 3}).size() == 1 + 49 + 1176 + 18424);
  }
}
