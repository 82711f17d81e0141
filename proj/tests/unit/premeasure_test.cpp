#include <doctest.h>

#include "oracles.hpp"
#include "prand/combinatorics.hpp"
#include "prand/errors.hpp"
#include "prand/io.hpp"
#include "prand/premeasure.hpp"

using namespace prand;

namespace {

Dyadic q(std::int64_t num, std::int64_t log2_den) { return Dyadic(BigInt(num), -log2_den); }

const HSpec kLen = HSpec::length();
const HSpec kHalf = HSpec::scaled(1, 2);

}  // namespace

TEST_SUITE("premeasure") {
  TEST_CASE("weights") {
    CHECK(kLen(BinaryString("010")) == 3);
    CHECK(kHalf(BinaryString("010")) == 2);
    CHECK(kHalf(BinaryString()) == 0);
    CHECK(HSpec::scaled(2, 3)(BinaryString("00")) == 2);
    const HSpec t = HSpec::table({{BinaryString("0"), 4}}, "t");
    CHECK(t(BinaryString("0")) == 4);
    CHECK_THROWS_AS(t(BinaryString("1")), MissingHError);
    CHECK(t.describe() == "table:t");
    CHECK(kHalf.describe() == "scaled:1/2");
  }

  TEST_CASE("documented values") {
    CHECK(dwt(kLen)(StringSet::of({"00", "01"})) == q(1, 1));
    CHECK(pwt(kLen)(StringSet::of({"0", "00", "01"})) == q(1, 1));
    CHECK(dct(kLen)(StringSet::of({"0", "1", "00"})) == q(1, 1));
    const TreeFamily trees{universe(2), StringSet{}};
    CHECK(tree_mixture(trees)(StringSet::of({"1"})) == Dyadic::one());
    for (const auto& m : {dwt(kLen), pwt(kHalf), dct(kLen), pct(kHalf), star(dwt(kLen))}) {
      CHECK(m(StringSet{}).is_zero());
    }
  }

  TEST_CASE("star values") {
    CHECK(star(dwt(kHalf))(StringSet::of({"00", "01"})) == q(1, 1));
    CHECK(dwt(kHalf)(StringSet::of({"00", "01"})) == Dyadic::one());
    CHECK(star(dwt(kLen))(StringSet::of({"00", "01"})) == q(1, 1));
  }

  TEST_CASE("leaf measures agree with brute force on universe(3)") {
    const StringSet u = universe(3);
    for (const auto& [h, oh] : {std::pair{kLen, oracle::len()}, std::pair{kHalf, oracle::half()}}) {
      const auto m_dwt = dwt(h), m_pwt = pwt(h), m_dct = dct(h), m_pct = pct(h);
      for (auto mask : subsets_up_to(u.size(), 5)) {
        const StringSet f = u.select(mask);
        const auto s = oracle::strs(f);
        CHECK(oracle::to_q(m_dwt(f)) == oracle::dwt(oh, s));
        CHECK(oracle::to_q(m_pwt(f)) == oracle::pwt(oh, s));
        CHECK(oracle::to_q(m_dct(f)) == oracle::dct(oh, s));
        CHECK(oracle::to_q(m_pct(f)) == oracle::pct(oh, s));
        CHECK(m_pwt(f) <= m_dwt(f));
        CHECK(m_pct(f) <= m_dct(f));
        if (is_prefix_free(f)) {
          CHECK(m_pwt(f) == m_dwt(f));
          CHECK(m_pct(f) == m_dct(f));
        }
      }
    }
  }

  TEST_CASE("star agrees with enumeration of all covers") {
    const StringSet u = universe(2);
    const auto base = dwt(kHalf);
    const oracle::MFn om = [](const oracle::Set& c) { return oracle::dwt(oracle::half(), c); };
    const auto m = star(base);
    for (auto mask : subsets_up_to(u.size(), 4)) {
      const StringSet f = u.select(mask);
      CHECK(oracle::to_q(m(f)) == oracle::star(om, oracle::strs(f), oracle::strs(u)));
      CHECK(m(f) <= base(f));
    }
  }

  TEST_CASE("combinators") {
    const StringSet f = StringSet::of({"0", "10"});
    CHECK(sum(dwt(kLen), dwt(kHalf))(f) == dwt(kLen)(f) + dwt(kHalf)(f));
    CHECK(minimum(dwt(kLen), dwt(kHalf))(f) == dwt(kLen)(f));
    CHECK(sum(dwt(kLen), pct(kHalf)).describe() == "sum(dwt(len),pct(scaled:1/2))");
    CHECK(cached(dwt(kLen))(f) == dwt(kLen)(f));
  }

  TEST_CASE("tree mixtures") {
    CHECK(is_prefix_closed(StringSet::of({"@", "0", "00"})));
    CHECK_FALSE(is_prefix_closed(StringSet::of({"00"})));
    CHECK(is_prefix_closed(StringSet{}));
    CHECK_THROWS_AS(tree_mixture({StringSet::of({"00"})}), FormatError);
    const auto m = tree_mixture(io::read_tree_family(PRAND_TEST_DATA "/trees.txt"));
    CHECK(m(StringSet::of({"1"})) == q(1, 1));
    CHECK(m(StringSet::of({"@"})) == Dyadic::one() + q(3, 2));
    CHECK(m(StringSet::of({"011"})) == q(1, 2));
    CHECK(m.describe() == "trees(3)");
  }

  TEST_CASE("axiom checker accepts the built-in measures") {
    const StringSet u = universe(3);
    const HSpec table = io::read_h_table(PRAND_TEST_DATA "/h_table.txt");
    for (const auto& m : {dwt(kLen), pct(kHalf), dct(table), star(dwt(kLen)),
                          tree_mixture(io::read_tree_family(PRAND_TEST_DATA "/trees.txt"))}) {
      const auto r = check_premeasure_axioms(m, u, 3);
      CHECK_MESSAGE(r.pass, r.line());
    }
  }

  TEST_CASE("axiom checker rejects a superadditive function") {
    const auto bad = custom("square", [](const StringSet& f) { return Dyadic(BigInt(f.size() * f.size()), -3); });
    const auto r = check_premeasure_axioms(bad, universe(2), 3);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses.front().find("subadditivity") != std::string::npos);
  }

  TEST_CASE("axiom checker rejects nonzero on the empty set and non-monotone functions") {
    const auto shifted = custom("one", [](const StringSet&) { return Dyadic::one(); });
    CHECK_FALSE(check_premeasure_axioms(shifted, universe(1), 2).pass);
    const auto shrinking = custom("shrink", [](const StringSet& f) {
      return f.empty() ? Dyadic() : Dyadic::pow2(-static_cast<std::int64_t>(f.size()));
    });
    const auto r = check_premeasure_axioms(shrinking, universe(1), 2);
    CHECK_FALSE(r.pass);
    CHECK(r.witnesses.front().find("monotonicity") != std::string::npos);
  }

  TEST_CASE("pointwise min of incomparable measures can fail subadditivity") {
    // min(a,b)(F1 ∪ F2) may take its value from the other operand than either part.
    const auto m = minimum(pwt(kLen), dct(kHalf));
    const StringSet f1 = StringSet::of({"0"}), f2 = StringSet::of({"1", "10", "11"});
    CHECK(m(f1) + m(f2) < m(f1.united(f2)));
    CHECK_FALSE(check_premeasure_axioms(m, universe(2), 3).pass);
    CHECK(check_premeasure_axioms(minimum(dct(kLen), pct(kHalf)), universe(3), 3).pass);
  }

  TEST_CASE("star is monotone under the covering preorder") {
    const auto r = check_star_monotone(dwt(kHalf), universe(3), 2);
    CHECK_MESSAGE(r.pass, r.line());
    // Prefix choices give the least cover only for a monotone base; this one is not.
    const auto flip = custom("flip", [](const StringSet& f) {
      Dyadic t;
      for (const auto& s : f) t += Dyadic::pow2(-static_cast<std::int64_t>(s.size()));
      return f.size() > 1 ? Dyadic() : t;
    });
    CHECK_FALSE(check_star_monotone(flip, universe(2), 2).pass);
  }

  TEST_CASE("serial and parallel axiom checks report identically") {
    const auto m = pct(kHalf);
    CHECK(check_premeasure_axioms(m, universe(3), 2, Exec::serial).line() ==
          check_premeasure_axioms(m, universe(3), 2, Exec::parallel).line());
    const auto bad = custom("square", [](const StringSet& f) { return Dyadic(BigInt(f.size() * f.size()), -3); });
    const auto a = check_premeasure_axioms(bad, universe(2), 3, Exec::serial);
    const auto b = check_premeasure_axioms(bad, universe(2), 3, Exec::parallel);
    CHECK(a.line() == b.line());
    CHECK(a.witnesses == b.witnesses);
  }

  TEST_CASE("star refuses oversized choice spaces") {
    std::vector<BinaryString> many;
    for (const auto& s : universe(10).members()) {
      if (s.size() == 10) many.push_back(s);
    }
    many.resize(8);
    CHECK_THROWS_AS(star(dwt(kLen))(StringSet(many)), ResourceLimitError);
  }
}
