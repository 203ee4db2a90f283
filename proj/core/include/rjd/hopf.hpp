// hopf.hpp - coproduct, counit, antipode over presented algebras; pairings and Hopf maps
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "rjd/algebras.hpp"
#include "rjd/verdict.hpp"

namespace rjd {

// element of A (x) A (x) A keyed by the three words joined with a separator byte
using Tensor3 = std::unordered_map<std::string, fe>;

class Hopf {
public:
    explicit Hopf(AlgebraPtr a);
    static std::shared_ptr<const Hopf> of(const std::string& preset);

    const Algebra& algebra() const { return *a_; }
    const AlgebraPtr& algebra_ptr() const { return a_; }
    const std::string& name() const { return a_->name(); }

    // extended multiplicatively; results are in normal form on both sides
    Tensor delta(const Element& x) const;
    Tensor delta_word(const Word& w) const;
    fe counit(const Element& x) const;
    fe counit_word(const Word& w) const;
    // extended anti-multiplicatively
    Element antipode(const Element& x) const;
    Element antipode_word(const Word& w) const;

    Tensor tmul(const Tensor& x, const Tensor& y) const;
    Element multiply(const Tensor& t) const;
    Tensor normal(const Tensor& t) const;
    // (delta (x) id) and (id (x) delta)
    Tensor3 delta_left(const Tensor& t) const;
    Tensor3 delta_right(const Tensor& t) const;

    std::string str(const Tensor& t) const { return t.str(a_->alphabet(), a_->field()); }
    std::string str(const Element& e) const { return a_->str(e); }

private:
    AlgebraPtr a_;
    std::vector<Tensor> d_;
    std::vector<fe> e_;
    std::vector<Element> s_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Word, Tensor> dmemo_;
    mutable std::unordered_map<Word, Element> smemo_;
};

using HopfPtr = std::shared_ptr<const Hopf>;

struct HopfAxiomReport {
    Verdict well_defined;   // delta, counit, antipode kill every defining relation
    Verdict coassociative;  // (delta (x) id) delta = (id (x) delta) delta
    Verdict counital;       // (eps (x) id) delta = id = (id (x) eps) delta
    Verdict multiplicative; // delta(x y) = delta(x) delta(y) for generators y
    Verdict antipode;       // m (S (x) id) delta = eps = m (id (x) S) delta
    std::size_t domain = 0;
    bool ok() const {
        return well_defined.ok && coassociative.ok && counital.ok && multiplicative.ok && antipode.ok;
    }
};

// domain: full basis for finite algebras; otherwise generators plus sampled
// normal monomials of weighted degree <= degree_bound
HopfAxiomReport check_hopf_axioms(const Hopf& h, std::size_t samples = 500, int degree_bound = 4,
                                  unsigned seed = 1);
std::vector<Word> sample_words(const Algebra& a, std::size_t samples, int degree_bound, unsigned seed);

// S^k(x) == conj(x) on the given words; conj = nullptr means identity
Verdict check_antipode_power(const Hopf& h, int k, const std::vector<Word>& words,
                             const std::function<Element(const Element&)>& conj = nullptr);

// span of elements given by their supports; membership without fixing an ambient basis
class SparseSpan {
public:
    SparseSpan() = default;
    explicit SparseSpan(const std::vector<Element>& gens, const Field& f = Field());
    bool contains(const Element& x) const;
    std::size_t dim() const { return rank_; }

private:
    Field f_;
    std::map<Word, std::size_t> index_;
    std::optional<Subspace> sub_;
    std::size_t rank_ = 0;
};

// left adjoint action h1 x S(h2)
Element adjoint(const Hopf& h, const Element& by, const Element& x);
// every generator letter (inverse letters included) keeps span(xs) stable
Verdict adjoint_stable(const Hopf& h, const std::vector<Element>& xs,
                       const std::function<bool(const Element&)>& member);
// tensor lies in V (x) W
bool tensor_in(const Tensor& t, const std::function<bool(const Element&)>& left,
               const std::function<bool(const Element&)>& right);

struct IntegralSpaces {
    Subspace left, right;
    bool unimodular = false;
};
IntegralSpaces integral_spaces(const Hopf& h);

// algebra map given on generators (names of the source presentation)
class HopfMap {
public:
    HopfMap(std::string name, HopfPtr src, HopfPtr dst, const std::map<std::string, std::string>& images);

    const std::string& name() const { return name_; }
    const Hopf& source() const { return *src_; }
    const Hopf& target() const { return *dst_; }
    const HopfPtr& source_ptr() const { return src_; }
    const HopfPtr& target_ptr() const { return dst_; }
    Element apply(const Element& x) const;
    Element apply_word(const Word& w) const;
    Tensor apply(const Tensor& t) const;
    Element image(const std::string& gen) const;

private:
    std::string name_;
    HopfPtr src_, dst_;
    std::vector<Element> letters_;
    mutable std::mutex mu_;
    mutable std::unordered_map<Word, Element> memo_;
};

// relations go to 0; delta, counit and antipode commute with f on generators
Verdict hopf_morphism_check(const HopfMap& f);

// skew pairing between two Hopf algebras, given on generator pairs
class Pairing {
public:
    Pairing(HopfPtr h, HopfPtr k, const std::map<std::pair<std::string, std::string>, fe>& table,
            int exponent_bound = 12);

    fe operator()(const Element& h, const Element& k) const;
    fe value(const Word& h, const Word& k) const;  // words over base and inverse letters
    const Hopf& left() const { return *h_; }
    const Hopf& right() const { return *k_; }

private:
    fe letter_value(int hl, const Word& k) const;
    Element expand(const Hopf& side, const Word& w) const;

    HopfPtr h_, k_;
    std::map<std::pair<int, int>, fe> table_;
    int bound_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<Word, Word>, fe> memo_;
};

struct PairingReport {
    Verdict left_mult;   // tau(h h' (x) k) = tau(h (x) k1) tau(h' (x) k2)
    Verdict right_mult;  // tau(h (x) k' k) = tau(h1 (x) k) tau(h2 (x) k')
    Verdict units;       // tau(1 (x) k) = eps(k), tau(h (x) 1) = eps(h)
    bool ok() const { return left_mult.ok && right_mult.ok && units.ok; }
};
PairingReport check_pairing_axioms(const Pairing& tau, std::size_t samples, int degree_bound, unsigned seed);

// the pairing between the infinite covers fixed by its generator values
Pairing dtilde_pairing();

}  // namespace rjd
