// suites.hpp - named verification suites and their reports
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace rjd::suites {

// bad suite name or configuration outside the guards
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SuiteConfig {
    int field_ext = 1;
    int exp_bound = 6;
    int range = 3;
    int nmax = 3;
    unsigned seed = 1;
    // targeted zoo run
    std::optional<std::string> family;
    int r = 1, t = 0, n = 1;
    unsigned lambda = 1;

    void validate() const;
    nlohmann::json to_json() const;
};

struct Check {
    std::string id;
    std::string claim;
    std::string status;  // pass, fail, bounded-evidence, unverified
    std::string expected, actual, witness;
};

struct Report {
    std::string suite;
    SuiteConfig config;
    std::vector<Check> checks;
    std::vector<std::string> notices;
    double seconds = 0;

    bool ok() const;
    const Check* find(const std::string& id) const;
    // sorted keys, no timing, so equal configs give identical text
    nlohmann::json to_json() const;
    std::string text() const;
};

const std::vector<std::string>& suite_names();
Report run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace rjd::suites
