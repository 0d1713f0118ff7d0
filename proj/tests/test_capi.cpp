#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "weylcert.h"

namespace {

struct Engine {
  wc_engine* e = wc_engine_create();
  ~Engine() { wc_engine_destroy(e); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  wc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version string is present") {
  const char* v = wc_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
}

TEST_CASE("suite list returns the ten suites as JSON") {
  Engine eng;
  char* names = nullptr;
  REQUIRE(wc_suite_list(eng.e, &names) == WC_OK);
  auto j = nlohmann::json::parse(take(names));
  REQUIRE(j.is_array());
  CHECK(j.size() == 10);
  bool found = false;
  for (const auto& n : j) found = found || n == "group-law";
  CHECK(found);
}

TEST_CASE("running a suite yields a passing JSON report") {
  Engine eng;
  wc_suite_params params{3, 1, 1, 1, 0};
  char* report = nullptr;
  REQUIRE(wc_run_suite(eng.e, "group-law", &params, /*with_timings=*/0, &report) == WC_OK);
  auto j = nlohmann::json::parse(take(report));
  CHECK(j["suite"] == "group-law");
  CHECK(j["verdict"] == "pass");
  CHECK(!j["checks"].empty());
  CHECK(std::string(wc_last_error(eng.e)).empty());

  // deterministic without timings
  char* again = nullptr;
  REQUIRE(wc_run_suite(eng.e, "group-law", &params, 0, &again) == WC_OK);
  CHECK(nlohmann::json::parse(take(again)) == j);
}

TEST_CASE("unknown suites and bad parameters set the error message") {
  Engine eng;
  wc_suite_params params{3, 1, 1, 1, 0};
  char* report = nullptr;
  CHECK(wc_run_suite(eng.e, "no-such-suite", &params, 0, &report) == WC_ERR_INVALID_ARGUMENT);
  CHECK(report == nullptr);
  CHECK(!std::string(wc_last_error(eng.e)).empty());

  // p = 4 is not prime: the suite runs to a failing verdict and still
  // delivers the report so callers can see which check refused the input
  wc_suite_params even{4, 1, 1, 1, 0};
  CHECK(wc_run_suite(eng.e, "group-law", &even, 0, &report) == WC_ERR_VERIFICATION_FAILED);
  REQUIRE(report != nullptr);
  CHECK(nlohmann::json::parse(take(report))["verdict"] == "fail");
  report = nullptr;

  CHECK(wc_run_suite(eng.e, nullptr, &params, 0, &report) == WC_ERR_INVALID_ARGUMENT);
  CHECK(wc_run_suite(eng.e, "group-law", &params, 0, nullptr) == WC_ERR_INVALID_ARGUMENT);

  // null params fall back to the documented defaults
  char* dflt = nullptr;
  CHECK(wc_run_suite(eng.e, "group-law", nullptr, 0, &dflt) == WC_OK);
  take(dflt);
}

TEST_CASE("expression evaluation through the C API") {
  Engine eng;
  char* out = nullptr;
  REQUIRE(wc_eval(eng.e, "x1*x2 - x2*x1 + 1", 3, 1, /*tensor=*/0, &out) == WC_OK);
  CHECK(take(out) == "0");
  REQUIRE(wc_eval(eng.e, "x2*x1", 3, 1, 0, &out) == WC_OK);
  CHECK(take(out) == "x1*x2 + 1");
  // tensor mode brings the y-generators into scope
  REQUIRE(wc_eval(eng.e, "(x1 - y1)^3", 3, 1, /*tensor=*/1, &out) == WC_OK);
  CHECK(take(out) == "0");
  // without tensor mode the same input is an evaluation error
  CHECK(wc_eval(eng.e, "(x1 - y1)^3", 3, 1, 0, &out) == WC_ERR_ARITHMETIC);
  CHECK(!std::string(wc_last_error(eng.e)).empty());
}

TEST_CASE("syntax errors map to the parse status") {
  Engine eng;
  char* out = nullptr;
  CHECK(wc_eval(eng.e, "x1 +", 3, 1, 0, &out) == WC_ERR_PARSE);
  CHECK(std::string(wc_last_error(eng.e)).find("position") != std::string::npos);
}
