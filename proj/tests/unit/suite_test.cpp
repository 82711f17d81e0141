#include <doctest.h>

#include <sstream>

#include "prand/suite.hpp"

using namespace prand;

TEST_SUITE("suite") {
  TEST_CASE("tiny scale passes") {
    std::ostringstream out;
    const auto r = run_suite({}, out);
    CHECK_MESSAGE(r.pass(), out.str());
    CHECK(r.reports.size() > 20);
    CHECK(out.str().find("FAIL") == std::string::npos);
  }

  TEST_CASE("an injected non-rule is caught") {
    SuiteOptions o;
    o.inject_fixture = true;
    std::ostringstream out;
    const auto r = run_suite(o, out);
    CHECK_FALSE(r.pass());
    std::size_t failed = 0;
    for (const auto& rep : r.reports) failed += rep.pass ? 0 : 1;
    CHECK(failed == 1);
    CHECK(out.str().find("fixture:size<=2") != std::string::npos);
  }

  TEST_CASE("unknown scale") {
    SuiteOptions o;
    o.scale = "huge";
    std::ostringstream out;
    CHECK_THROWS_AS(run_suite(o, out), std::invalid_argument);
  }
}
