// zoo.hpp - named u(m)-modules, string and band families, walks on the bound quiver
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rjd/reptheory.hpp"

namespace rjd {

enum class Family { V0, V1, Vext, M, N, U1, U2, U3, U4, Vfam1, Vfam2, Wfam1, Wfam2, Aband, Bband };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& s);
bool is_string_family(Family f);
bool is_band_family(Family f);

struct StringBandSpec {
    Family family = Family::V0;
    int r = 1;        // U families, r >= 1
    int t = 0;        // V, W families, t >= 0
    int n = 1;        // bands, n >= 1
    fe lambda = 1;    // bands and Vext
    fe theta = 0, mu = 0;  // Vext

    std::size_t dim() const;
    std::string label(const Field& f) const;
};

// coefficient columns of the action tables, 1-based i in a module of dimension d
namespace table {
bool kappa(Family f, int i, int d);
bool mu(Family f, int i, int d);
bool xi(Family f, int i, int d);
int nu(Family f, int i);
}  // namespace table

// validated against u(m); throws InputError on bad parameters and logic_error on a relation violation
Module make_module(const StringBandSpec& spec, const Field& f = Field());

// every string and band family member with r, t <= range and n <= nmax, plus V0 and V1
std::vector<StringBandSpec> zoo_members(int range, int nmax, const Field& f);

// M, N: the filtrations and the two uniserial submodules spanning the radical
// (keys M0, M1, M2, U, V, meet for M and N0, N1, N2, U, V, meet for N)
std::map<std::string, Subspace> named_subspaces(Family f, const Field& fld = Field());

// arrows for a and b, vertex marks from the diagonal of c
std::string dump_module(const Module& m, const std::string& name = "");

Module pullback_to_double(const Module& m);

// u(m) automorphism a <-> b, c fixed
std::map<std::string, Element> chevalley_involution();

struct WalkLetter {
    int arrow = 0;
    bool inverse = false;
    bool operator==(const WalkLetter&) const = default;
    auto operator<=>(const WalkLetter&) const = default;
};

struct Walk {
    std::vector<WalkLetter> letters;
    int vertex = 0;  // start vertex; the whole walk when trivial

    bool trivial() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    int source(const QuiverData& q) const;
    int target(const QuiverData& q) const;
    Walk inverse(const QuiverData& q) const;
    Walk power(std::size_t k) const;
    std::string str(const QuiverData& q) const;
    bool operator==(const Walk&) const = default;
    auto operator<=>(const Walk&) const = default;
};

// "al1 al2^-1", or "e0" / "e1" for trivial walks
Walk parse_walk(const QuiverData& q, const std::string& s);
bool is_walk(const QuiverData& q, const Walk& w);
bool is_reduced(const QuiverData& q, const Walk& w);
// no contained path is a zero relation or one side of a binomial relation
bool is_string(const QuiverData& q, const Walk& w);
bool is_band(const QuiverData& q, const Walk& w);
// smallest rotation of u or its inverse
Walk band_representative(const QuiverData& q, const Walk& u);

// every string of length <= max_len, inverses included; ResourceError when max_len > 12
std::vector<Walk> enumerate_strings(const QuiverData& q, std::size_t max_len);
// one representative per band class among cycles of length <= max_len
std::vector<Walk> enumerate_bands(const QuiverData& q, std::size_t max_len = 8);

// the named families u_i(r), v_j(t), w_j(t), their inverses and the trivial walks, up to max_len
std::vector<std::pair<std::string, Walk>> string_families(const QuiverData& q, std::size_t max_len);

struct ZooCheck {
    std::string id;
    std::string status;  // pass or fail
    std::size_t checked = 0;
    std::string detail;
    std::vector<std::string> failures;
};

struct ClassificationReport {
    std::size_t members = 0;
    std::vector<ZooCheck> checks;
    bool ok() const;
    const ZooCheck* find(const std::string& id) const;
};

// U1* ~ U4, U2* ~ U3, Vfam1* ~ Wfam1, Vfam2* ~ Wfam2, A* ~ B over the range
ZooCheck duality_table(int range, int nmax, const Field& f);

// validity, dimension, indecomposability, Jordan type of a, pairwise non-isomorphism,
// the duality table, double duals and the pullback to D(H)
ClassificationReport verify_classification(int range, int nmax, const Field& f);

struct TwistReport {
    std::size_t checked = 0;
    std::vector<std::string> inverse_lambda;  // lambda with A^theta ~ A_{1/lambda}
    std::vector<std::string> same_lambda;     // lambda with A^theta ~ A_lambda
    bool involution = false;                  // theta o theta = id on generators
    bool ok() const { return inverse_lambda.size() == checked; }
};
TwistReport chevalley_twist_check(const Field& f, int n = 2);

}  // namespace rjd
