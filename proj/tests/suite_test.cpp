#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "leibniz/suite.hpp"

using namespace leibniz;

TEST_CASE("every built-in check passes") {
  std::vector<CheckOutcome> out = run_suite(20260817);
  CHECK(out.size() == suite_check_names().size());
  for (const CheckOutcome& o : out) {
    INFO(o.name, ": ", o.detail);
    CHECK(o.pass);
    CHECK(o.cases > 0);
  }
}

TEST_CASE("the filter selects checks by substring") {
  std::vector<CheckOutcome> stem = run_suite(7, "stem");
  REQUIRE(stem.size() == 3);
  CHECK(stem[0].name == "stem-criterion");
  CHECK(stem[1].name == "stem-reduction");
  CHECK(stem[2].name == "stem-center");

  CHECK(run_suite(7, "no-such-check").empty());
  CHECK(run_suite(7, "").size() == suite_check_names().size());
}

TEST_CASE("outcomes are deterministic for a fixed seed") {
  std::vector<CheckOutcome> a = run_suite(42, "oracle");
  std::vector<CheckOutcome> b = run_suite(42, "oracle");
  REQUIRE(a.size() == b.size());
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].detail == b[i].detail);
  }
}

TEST_CASE("check names are unique and in execution order") {
  std::vector<std::string> names = suite_check_names();
  REQUIRE(names.size() >= 20);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      CHECK(names[i] != names[j]);
  std::vector<CheckOutcome> out = run_suite(1, "witness-");
  std::size_t pos = 0;
  for (const CheckOutcome& o : out) {
    while (pos < names.size() && names[pos] != o.name) ++pos;
    CHECK(pos < names.size());
  }
}
