// identities.hpp - parametrized consequence identities checked through normal forms
#pragma once

#include <string>
#include <vector>

namespace rjd {

// lhs/rhs templates: {2n+1} is an exponent, [n] a coefficient taken mod 2;
// h, w, cbar and xi stand for 1+g, w1+w2, 1+c and zeta
struct IdentityRow {
    std::string id;
    std::string group;    // relbasic, commutation, dual, dtilde
    std::string algebra;  // preset name
    std::string lhs, rhs;
    std::string reading = "literal";  // literal or corrected
    std::string note;
    int m_min = 0, n_min = 0;

    bool uses(char var) const;
    bool uses_xi() const;
};

std::vector<IdentityRow> identity_rows();

// expands the template for given m, n; powers with a negative exponent become 0
std::string instantiate(const std::string& tmpl, int m, int n, const std::string& xi = "zeta");

struct IdentityResult {
    IdentityRow row;
    std::size_t instances = 0;
    bool holds = true;
    std::string witness;  // first failing instance
    std::vector<std::string> failing;  // "m=..,n=.." of every failing instance
    std::vector<std::string> xi_shifted_failing;  // same with xi read as 1+zeta (rows using xi)
};

std::vector<IdentityResult> check_identities(int exponent_bound = 6);

// summary status of an identity id over its literal and corrected readings:
// pass, corrected, xi-discrepancy or fail
struct IdentityVerdict {
    std::string id, group, algebra, status, detail;
};
std::vector<IdentityVerdict> summarize_identities(const std::vector<IdentityResult>& results);

// x (y z) = (x y) z on random triples of normal words
struct AssociativityReport {
    std::size_t triples = 0, failures = 0;
    std::string witness;
};
AssociativityReport associativity_spot_check(const std::string& preset, std::size_t triples, int degree_bound,
                                             unsigned seed);

}  // namespace rjd
