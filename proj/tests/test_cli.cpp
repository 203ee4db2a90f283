#include <doctest.h>

#include "suites.hpp"

using namespace rjd::suites;

TEST_CASE("ext-table suite") {
    auto r = run_suite("ext-table", {});
    REQUIRE(r.checks.size() == 4);
    CHECK(r.ok());
    std::vector<std::string> expected;
    for (auto& c : r.checks) expected.push_back(c.expected);
    CHECK(expected == std::vector<std::string>{"0", "2", "2", "0"});
}

TEST_CASE("reports are deterministic and sorted") {
    SuiteConfig cfg;
    cfg.seed = 3;
    auto a = run_suite("strings-bands", cfg).to_json().dump();
    auto b = run_suite("strings-bands", cfg).to_json().dump();
    CHECK(a == b);
    auto r = run_suite("basic-quiver", cfg);
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const Check& x, const Check& y) { return x.id < y.id; }));
    CHECK(r.to_json().contains("config"));
    CHECK_FALSE(r.to_json().contains("duration"));
}

TEST_CASE("band checks escalate the field") {
    auto r = run_suite("duality", {});
    REQUIRE(r.notices.size() == 1);
    CHECK(r.notices[0].find("k=4") != std::string::npos);
    CHECK(r.ok());
    SuiteConfig big;
    big.field_ext = 4;
    CHECK(run_suite("duality", big).notices.empty());
}

TEST_CASE("guards and unknown suites") {
    CHECK_THROWS_AS(run_suite("nope", {}), UsageError);
    SuiteConfig c;
    c.field_ext = 17;
    CHECK_THROWS_AS(run_suite("ext-table", c), UsageError);
    c = {};
    c.exp_bound = 11;
    CHECK_THROWS_AS(run_suite("ext-table", c), UsageError);
    c = {};
    c.range = 6;
    CHECK_THROWS_AS(run_suite("ext-table", c), UsageError);
    c = {};
    c.family = "Zband";
    CHECK_THROWS_AS(run_suite("zoo", c), UsageError);
}

TEST_CASE("targeted zoo run") {
    SuiteConfig c;
    c.family = "Bband";
    c.n = 2;
    c.lambda = 2;
    auto r = run_suite("zoo", c);
    CHECK(r.ok());
    CHECK(r.find("member/indecomposable")->status == "pass");
    c.lambda = 0;
    CHECK_THROWS_AS(run_suite("zoo", c), UsageError);
}

TEST_CASE("suite names") {
    auto& n = suite_names();
    CHECK(n.size() == 13);
    CHECK(n.back() == "all");
}
