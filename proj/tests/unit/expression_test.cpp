#include <doctest.h>

#include "prand/errors.hpp"
#include "prand/expression.hpp"

using namespace prand;

namespace {

std::size_t offset_of(std::string_view text) {
  try {
    (void)parse_expression(text);
  } catch (const ParseError& e) {
    return e.offset();
  }
  return std::string::npos;
}

}  // namespace

TEST_SUITE("expression") {
  TEST_CASE("measures") {
    CHECK(parse_measure("dwt(len)").describe() == "dwt(len)");
    CHECK(parse_measure(" sum( dwt(len), pct(scaled:1/2) ) ").describe() == "sum(dwt(len),pct(scaled:1/2))");
    CHECK(parse_measure("rsqrt(kp(len))").describe() == "rsqrt(kp(len))");
    const auto m = parse_measure("min(dct(len),star(dwt(scaled:1/2)))");
    CHECK(m(StringSet::of({"00", "01"})) == Dyadic::pow2(-2));
    CHECK(parse_measure("trees(" PRAND_TEST_DATA "/trees.txt)")(StringSet::of({"1"})) == Dyadic::pow2(-1));
    CHECK(parse_measure("dwt(table:" PRAND_TEST_DATA "/h_table.txt)")(StringSet::of({"1"})) == Dyadic::pow2(-2));
  }

  TEST_CASE("rules") {
    CHECK(parse_rule("msqrt(star(dwt(scaled:1/2)))").describe() == "msqrt(star(dwt(scaled:1/2)))");
    const Rule both = parse_rule("and(kp(len),ks(len))");
    CHECK(both(FiniteComplexity::of({{"00", 2}})));
    CHECK_FALSE(both(FiniteComplexity::of({{"0", 0}})));
    const Rule either = parse_rule("or(kp(len),kp(len))");
    CHECK(either(FiniteComplexity::of({{"0", 2}, {"1", 2}})));
    CHECK_FALSE(either(FiniteComplexity::of({{"0", 1}, {"1", 1}})));
  }

  TEST_CASE("default weight") {
    ExpressionContext ctx;
    CHECK_THROWS_AS(parse_measure("dwt(h)", ctx), ParseError);
    ctx.default_h = HSpec::scaled(1, 2);
    CHECK(parse_measure("dwt(h)", ctx).describe() == "dwt(scaled:1/2)");
    CHECK(parse_h("scaled:2/3").describe() == "scaled:2/3");
  }

  TEST_CASE("either kind") {
    CHECK(std::holds_alternative<PreMeasure>(parse_expression("pwt(len)")));
    CHECK(std::holds_alternative<Rule>(parse_expression("kd(len)")));
  }

  TEST_CASE("error offsets") {
    CHECK(offset_of("dwt(") == 4);
    CHECK(offset_of("dwt(len") == 7);
    CHECK(offset_of("foo(len)") == 0);
    CHECK(offset_of("dwt(len) x") == 9);
    CHECK(offset_of("sum(dwt(len);dwt(len))") == 12);
    CHECK(offset_of("dwt(scaled:1/0)") != std::string::npos);
    CHECK_THROWS_AS(parse_measure("kp(len)"), ParseError);
    CHECK_THROWS_AS(parse_rule("dwt(len)"), ParseError);
  }
}
