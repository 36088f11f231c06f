#include "fpoisson/document.hpp"
#include "fpoisson/suites.hpp"

#include <doctest.h>

using namespace fpoisson;

TEST_CASE("every suite passes on a small run")
{
    for (const SuiteInfo& s : suite_catalog()) {
        CAPTURE(s.name);
        const VerificationReport r = run_suite(s.name, {.trials = s.default_trials ? 10 : 0, .seed = 3, .threads = 1});
        CHECK(r.passed());
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("reports do not depend on the thread count")
{
    for (const char* name : {"chain-rule", "par-ker", "certificates"}) {
        CAPTURE(name);
        const auto one = run_suite(name, {.trials = 12, .seed = 5, .threads = 1});
        const auto three = run_suite(name, {.trials = 12, .seed = 5, .threads = 3});
        CHECK(report_json(one) == report_json(three));
    }
}

TEST_CASE("suite lookup")
{
    CHECK(find_suite("par-at") != nullptr);
    CHECK(find_suite("nope") == nullptr);
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}
