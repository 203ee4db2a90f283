// algebras.hpp - presented algebras, coordinate algebras, Lie and quiver data
#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rjd/matrix.hpp"
#include "rjd/rewrite.hpp"

namespace rjd {

// an algebra given by a completed presentation; finite or infinite
class Algebra {
public:
    static std::shared_ptr<const Algebra> build(const std::string& preset, const CompletionOptions& opt = {});
    static std::shared_ptr<const Algebra> from_presentation(Presentation p, const CompletionOptions& opt = {});

    const std::string& name() const { return p_.name; }
    const Presentation& presentation() const { return p_; }
    const RewriteSystem& system() const { return *sys_; }
    const ConfluenceReport& report() const { return report_; }
    const Alphabet& alphabet() const { return sys_->alphabet(); }
    const Field& field() const { return sys_->field(); }

    bool finite() const { return finite_; }
    std::size_t dim() const;
    const std::vector<Word>& basis() const;
    std::optional<std::size_t> index(const Word& w) const;

    Element mul(const Element& x, const Element& y) const { return sys_->mul(x, y); }
    Element pow(const Element& x, unsigned n) const { return sys_->pow(x, n); }
    Element parse(const std::string& s) const { return sys_->parse(s); }
    Element letter(const std::string& name) const;
    std::string str(const Element& e) const { return sys_->str(e); }
    // letters of non-derived generators (no inverse letters)
    std::vector<int> generator_letters() const;
    std::vector<std::pair<std::string, Element>> relations() const;

    // coordinates in the PBW basis (finite algebras only)
    Matrix coords(const Element& e) const;
    Element element(const Matrix& row, std::size_t r = 0) const;
    // matrices on column coordinate vectors
    Matrix left_mult(const Element& x) const;
    Matrix right_mult(const Element& x) const;

private:
    Algebra(Presentation p, Completion c);
    Presentation p_;
    std::shared_ptr<const RewriteSystem> sys_;
    ConfluenceReport report_;
    bool finite_ = false;
    std::vector<Word> basis_;
    std::unordered_map<Word, std::size_t> index_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// a module: one matrix per algebra generator, acting on column vectors
struct Module {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> names;
    std::vector<Matrix> gens;
    std::string label;

    const Matrix& act(const std::string& name) const;
};

// matrix of a word or element on a module over a presented algebra
Matrix eval_word(const Algebra& a, const Module& m, const Word& w);
Matrix evaluate(const Algebra& a, const Module& m, const Element& x);

// finite-dimensional algebra in coordinates: basis, products, generators
class FDAlgebra {
public:
    using Product = std::function<Matrix(std::size_t, std::size_t)>;
    using Evaluator = std::function<Matrix(const Module&, std::size_t)>;

    FDAlgebra(std::string name, Field f, std::vector<std::string> labels, Matrix unit,
              std::vector<std::string> gen_names, std::vector<Matrix> gen_rows, Product prod, Evaluator eval);
    static std::shared_ptr<const FDAlgebra> of(const AlgebraPtr& a);

    const std::string& name() const { return name_; }
    const Field& field() const { return f_; }
    std::size_t dim() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    const Matrix& unit() const { return unit_; }
    const std::vector<std::string>& generator_names() const { return gen_names_; }
    const std::vector<Matrix>& generators() const { return gen_rows_; }

    // 1 x dim coordinate rows
    Matrix product(std::size_t i, std::size_t j) const;
    Matrix mul(const Matrix& x, const Matrix& y, std::size_t rx = 0, std::size_t ry = 0) const;
    Matrix left_mult(const Matrix& x, std::size_t r = 0) const;
    Matrix right_mult(const Matrix& x, std::size_t r = 0) const;
    // action of basis element i on a module over this algebra
    Matrix eval_basis(const Module& m, std::size_t i) const { return eval_(m, i); }
    Matrix eval(const Module& m, const Matrix& x, std::size_t r = 0) const;
    Module regular() const;
    Matrix basis_row(std::size_t i) const;

private:
    std::string name_;
    Field f_;
    std::vector<std::string> labels_;
    Matrix unit_;
    std::vector<std::string> gen_names_;
    std::vector<Matrix> gen_rows_;
    Product prod_;
    Evaluator eval_;
    mutable std::mutex mu_;
    mutable std::vector<std::optional<Matrix>> cache_;
};

using FDAlgebraPtr = std::shared_ptr<const FDAlgebra>;

// span of all products of the given elements (finite algebras)
struct Subalgebra {
    Subspace span;
    std::vector<Element> basis;
};
Subalgebra subalgebra_basis(const Algebra& a, const std::vector<Element>& gens);

struct CommutativityResult {
    bool commutative = true;
    std::string witness;
};
CommutativityResult check_commutative(const Algebra& a, const std::vector<Element>& elems);

// restricted Lie algebra m with basis b', b, c, a, a'
struct RestrictedLieData {
    std::vector<std::string> basis;
    // bracket[i][j] as coefficient vector over GF(2)
    std::vector<std::vector<std::vector<fe>>> bracket;
    std::vector<std::vector<fe>> two_op;

    static RestrictedLieData m();
    std::size_t dim() const { return basis.size(); }
    std::size_t index(const std::string& s) const;
    std::vector<fe> br(const Field& f, const std::vector<fe>& x, const std::vector<fe>& y) const;
    std::vector<fe> p2(const Field& f, const std::vector<fe>& x) const;
    // axioms: alternating, Jacobi, ad of x^[2] = (ad x)^2; random pairs over f
    std::vector<std::string> check_axioms(const Field& f, int samples, unsigned seed) const;
};

struct LieCheck {
    bool ok = true;
    std::string witness;
};
// phi given by the images of the basis vectors (rows of a dim x dim matrix)
LieCheck check_lie_automorphism(const std::vector<std::vector<fe>>& phi, const RestrictedLieData& L, const Field& f);
std::vector<std::vector<fe>> phi_matrix(const Field& f, fe kappa, fe lambda, fe mu, fe zeta);

struct Arrow {
    std::string name;
    int source, target;
};

struct QuiverData {
    int vertices = 2;
    std::vector<Arrow> arrows;
    // relations as sums of paths (paths are arrow index sequences)
    std::vector<std::vector<std::vector<int>>> relations;

    static QuiverData bound_quiver();
    int arrow(const std::string& n) const;
    bool zero_relation(const std::vector<int>& path) const;
    // binomial relations p + q: returns the partner path if path is one side
    std::optional<std::vector<int>> binomial_partner(const std::vector<int>& path) const;
};

struct BasicAlgebraData {
    AlgebraPtr ambient;
    Element e0, e1, e;
    std::vector<std::string> basis_text;
    std::vector<Element> basis;
    std::vector<std::string> radical_text, radical2_text;
    std::map<std::string, std::string> arrows;  // quiver arrow -> element text
    std::vector<std::pair<std::string, std::string>> psi;

    static BasicAlgebraData load(const std::string& preset = "basic");
    std::shared_ptr<const FDAlgebra> algebra() const;
    // coordinates of an element of e A e in the listed basis
    std::optional<Matrix> coords(const Element& x) const;
};

}  // namespace rjd
