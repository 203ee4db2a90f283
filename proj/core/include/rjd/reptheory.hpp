// reptheory.hpp - modules over finite-dimensional algebras: series, Hom, Ext, simples
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rjd/algebras.hpp"
#include "rjd/hopf.hpp"

namespace rjd {

// violated relations, empty when the module is valid; throws InputError on shape mismatch
std::vector<std::string> check_representation(const Algebra& a, const Module& m);
// against structure constants: unit acts as 1 and products match
std::vector<std::string> check_representation(const FDAlgebra& a, const Module& m);

Module extend_field(const Module& m, const Field& f);
Module direct_sum(const Module& x, const Module& y);
// S is assumed invariant
Module submodule(const Module& m, const Subspace& s);
Module quotient(const Module& m, const Subspace& s);
// outer / inner with inner inside outer
Module subquotient(const Module& m, const Subspace& outer, const Subspace& inner);
// smallest invariant subspace containing the rows of v
Subspace spin(const Module& m, const Matrix& v);
bool is_invariant(const Module& m, const Subspace& s);

// intertwiners T (dim y x dim x) with T rho_x(g) = rho_y(g) T for every generator
std::vector<Matrix> hom_space(const Module& x, const Module& y);

struct IsoResult {
    bool iso = false;
    bool certain = true;
    std::string note;
    std::optional<Matrix> witness;
};
IsoResult isomorphism(const Module& x, const Module& y, unsigned seed = 1);
inline bool is_isomorphic(const Module& x, const Module& y, unsigned seed = 1) { return isomorphism(x, y, seed).iso; }

struct IndecResult {
    bool indecomposable = false;
    bool certain = true;
    std::size_t end_dim = 0;
    std::string note;
};
IndecResult indecomposability(const Module& m);
inline bool is_indecomposable(const Module& m) { return indecomposability(m).indecomposable; }

// Meataxe chop into composition factors (unordered); throws ResourceError when no split is found
std::vector<Module> composition_factors(const Module& m, unsigned seed = 1);
// Norton-certified simplicity
bool is_simple(const Module& m, unsigned seed = 1);

// partition of a nilpotent matrix, largest part first; throws InputError otherwise
std::vector<std::size_t> jordan_type(const Matrix& n);

struct ModuleSeries {
    std::vector<Subspace> radical;  // V = rad^0 > rad^1 > ... > 0
    std::vector<Subspace> socle;    // 0 = soc^0 < soc^1 < ... = V
    std::vector<int> factors;       // indices into the simples, bottom-up along the socle series
};

// simples, Jacobson radical and the module machinery that depends on them
class RepContext {
public:
    RepContext(FDAlgebraPtr a, unsigned seed = 1, std::optional<Field> f = std::nullopt);

    const FDAlgebra& algebra() const { return *a_; }
    const FDAlgebraPtr& algebra_ptr() const { return a_; }
    const Field& field() const { return f_; }
    unsigned seed() const { return seed_; }
    const std::vector<Module>& simples() const { return simples_; }
    Module regular() const;

    // Jacobson radical as rows of algebra coordinates; computed on first use
    const Subspace& jacobson() const;
    int nilpotency_index() const;
    // dim A - dim Jac equals the sum of squared simple dimensions
    bool wedderburn_complete() const;

    // index of the simple isomorphic to s, or -1
    int identify(const Module& s) const;
    Subspace radical(const Module& m) const;
    Subspace socle(const Module& m) const;
    ModuleSeries series(const Module& m) const;
    bool is_uniserial(const Module& m) const;
    // generators of A act on A e by left multiplication; throws InputError if e is not idempotent
    Module projective(const Matrix& e) const;
    // dim Hom(rad P / rad^2 P, T) with P a projective whose top is simple
    std::size_t ext1(const Module& p, const Module& t) const;
    // top of a module as simple indices
    std::vector<int> top(const Module& m) const;

private:
    std::vector<Matrix> basis_actions(const Module& m) const;
    std::vector<Matrix> jac_actions(const Module& m) const;

    FDAlgebraPtr a_;
    unsigned seed_;
    Field f_;
    std::vector<Module> simples_;
    mutable std::optional<Subspace> jac_;
    mutable int nil_ = 0;
};

struct BiserialWitness {
    bool found = false;
    Subspace u, v;
    int meet = -1;  // simple index of U cap V
};
// rad m = U + V with U, V uniserial and U cap V simple
BiserialWitness biserial_witness(const RepContext& ctx, const Module& m);

// x acts by rho(S(x))^T, or by rho(S^-1(x))^T
Module dual_module(const Hopf& h, const Module& m, bool use_inverse = false);
// rho^theta(x) = rho(theta(x)); theta given on generator names
Module twist(const Algebra& a, const Module& m, const std::map<std::string, Element>& theta);

struct SmallSearch {
    std::size_t candidates = 0, valid = 0, nonzero = 0;
};
// every assignment of dim x dim matrices over GF(2) to the generators, filtered by the relations
SmallSearch search_small_modules(const Algebra& a, std::size_t dim);

}  // namespace rjd
