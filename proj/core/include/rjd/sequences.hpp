// sequences.hpp - exact sequences of Hopf algebras and the named maps between presets
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rjd/hopf.hpp"

namespace rjd {

struct Stage {
    std::string id;
    std::string status;  // pass, fail, bounded-evidence
    std::string detail;
};

struct SequenceReport {
    std::string name;
    std::vector<Stage> stages;
    std::size_t kernel_dim = 0;
    bool ok() const;
    const Stage& stage(const std::string& id) const;
};

// K (given by generators inside A) -> A -> B with A, B finite
SequenceReport exact_sequence_check(const std::string& name, const std::vector<Element>& k_gens, const HopfMap& pi);

// coinvariants of pi among normal words of weighted degree <= d
std::vector<Element> bounded_coinvariants(const HopfMap& pi, int d);

// normal forms of products of gens whose weighted degree stays <= d
std::vector<Element> bounded_products(const Algebra& a, const std::vector<Element>& gens, int d);
int weighted_degree(const Algebra& a, const Element& x);

struct BoundedSequence {
    std::string name;
    const HopfMap* iota = nullptr;   // C -> A; null when C is given by generators inside A
    std::vector<Element> c_gens;     // generators of C inside A when iota is null
    const HopfMap* pi = nullptr;     // A -> B
    std::vector<std::pair<std::string, std::string>> quotient;  // A/A C^+ as extra relations
    int degree_bound = 4;
};
// stages: (i) maps, (ii) A/A C^+ against B, (iii) C -> A injective in bounded degree,
// (iv) coinvariants in bounded degree
SequenceReport bounded_sequence_check(const BoundedSequence& s);

// named objects
namespace catalog {
std::vector<Element> k_generators();  // x1, x21, g, w1, w21 in D(H)
std::vector<Element> n_generators();  // x2^4, x21^2, g^2, g^-2, w2^4, w21^2, zeta^2+zeta in D~
const HopfMap& pi_double();           // D(H) -> u(m)
const HopfMap& pr_dtilde();           // D~ -> D(H)
const HopfMap& pi_dtilde();           // D~ -> U(G)
const HopfMap& iota_middle_row();     // O(Gfrak) -> D~
const HopfMap& pi_left_column();      // O(Gfrak) -> D(H), onto K
const HopfMap& iota_left_column();    // O(G) -> O(Gfrak)
const HopfMap& iota_top_left();       // O(G) -> D~, onto N
const HopfMap& ug_to_um();            // U(G) -> u(m)
const HopfMap& um_identity();
}  // namespace catalog

struct NormalSubalgebraReport {
    Verdict commutative, adjoint_stable, coproduct_closed, monomials_independent;
    std::size_t monomials = 0;
};
// N inside D~ checked on its generators against the span of its products of degree <= d
NormalSubalgebraReport check_n_subalgebra(int d = 8);

struct SquareCheck {
    std::string id;
    Verdict v;
};
// the four squares of the diagram on generators
std::vector<SquareCheck> diagram_check();

}  // namespace rjd
