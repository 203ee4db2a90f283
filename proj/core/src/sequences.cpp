#include "rjd/sequences.hpp"

#include <deque>
#include <set>

namespace rjd {

bool SequenceReport::ok() const {
    for (auto& s : stages)
        if (s.status == "fail") return false;
    return true;
}

const Stage& SequenceReport::stage(const std::string& id) const {
    for (auto& s : stages)
        if (s.id == id) return s;
    throw std::out_of_range("no stage " + id);
}

namespace {

Stage from_verdict(const std::string& id, const Verdict& v, const std::string& pass_status = "pass") {
    return {id, v.ok ? pass_status : "fail", v.ok ? std::to_string(v.checked) + " checks" : v.witness};
}

// kernel of the row map v -> v M, as rows
Subspace left_kernel(const Matrix& m) { return Subspace::span(row_reduce(m.transposed()).kernel.transposed()); }

}  // namespace

SequenceReport exact_sequence_check(const std::string& name, const std::vector<Element>& k_gens, const HopfMap& pi) {
    SequenceReport rep{name, {}, 0};
    const Algebra& A = pi.source().algebra();
    const Algebra& B = pi.target().algebra();
    const Field& f = A.field();
    std::size_t nA = A.dim(), nB = B.dim();

    rep.stages.push_back(from_verdict("maps", hopf_morphism_check(pi)));

    Subalgebra K = subalgebra_basis(A, k_gens);
    std::size_t nK = K.basis.size();
    {
        bool ok = nK * nB == nA;
        rep.stages.push_back({"dimension", ok ? "pass" : "fail",
                              std::to_string(nK) + " * " + std::to_string(nB) + " vs " + std::to_string(nA)});
    }

    Matrix P(f, nA, nB);
    for (std::size_t i = 0; i < nA; ++i) P.add_row_from(i, B.coords(pi.apply_word(A.basis()[i])), 0);
    Subspace ker = left_kernel(P);
    rep.kernel_dim = ker.dim();
    {
        // A K^+ inside ker pi, then equal dimension
        Subspace span(f, nA);
        std::string bad;
        for (std::size_t j = 0; j < nK && bad.empty() && span.dim() < ker.dim(); ++j) {
            Element kplus = K.basis[j];
            if (fe e = pi.source().counit(K.basis[j])) kplus += Element::scalar(e);
            if (kplus.is_zero()) continue;
            for (std::size_t i = 0; i < nA; ++i) {
                Matrix row = A.coords(A.mul(Element::word(A.basis()[i]), kplus));
                if (!(row * P).is_zero()) {
                    bad = A.alphabet().str(A.basis()[i]) + " (" + A.str(kplus) + ") not killed by " + pi.name();
                    break;
                }
                span.insert(row);
                if (span.dim() == ker.dim()) break;
            }
        }
        bool ok = bad.empty() && span.dim() == ker.dim() && ker.contains(span);
        rep.stages.push_back({"hopf-kernel", ok ? "pass" : "fail",
                              bad.empty() ? "dim A K+ = " + std::to_string(span.dim()) + ", dim ker = " +
                                                std::to_string(ker.dim())
                                          : bad});
    }
    {
        // x -> (id (x) pi) delta(x) + x (x) 1, one column per basis element of A
        auto one = B.index(Word{});
        Matrix T(f, nA * nB, nA);
        for (std::size_t i = 0; i < nA; ++i) {
            Tensor d = pi.source().delta_word(A.basis()[i]);
            for (auto& [k, c] : d.terms()) {
                std::size_t l = *A.index(k.first);
                for (const auto img = pi.apply_word(k.second); auto& [b, cb] : img.terms()) {
                    std::size_t r = l * nB + *B.index(b);
                    T.set(r, i, T.at(r, i) ^ f.mul(c, cb));
                }
            }
            std::size_t r = i * nB + *one;
            T.set(r, i, T.at(r, i) ^ 1);
        }
        Subspace co = Subspace::span(row_reduce(T).kernel.transposed());
        bool ok = co == K.span;
        rep.stages.push_back({"coinvariants", ok ? "pass" : "fail",
                              "dim coinvariants = " + std::to_string(co.dim()) + ", dim K = " + std::to_string(nK)});
    }
    return rep;
}

int weighted_degree(const Algebra& a, const Element& x) {
    int d = 0;
    for (auto& [w, c] : x.terms()) d = std::max(d, a.alphabet().weight(w));
    return d;
}

std::vector<Element> bounded_products(const Algebra& a, const std::vector<Element>& gens, int d) {
    std::vector<Element> out{Element::one()};
    std::set<Element> seen{Element::one()};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (auto& g : gens) {
            Element v = a.mul(out[i], g);
            if (v.is_zero() || weighted_degree(a, v) > d || !seen.insert(v).second) continue;
            out.push_back(v);
        }
    return out;
}

std::vector<Element> bounded_coinvariants(const HopfMap& pi, int d) {
    const Algebra& A = pi.source().algebra();
    const Field& f = A.field();
    std::vector<Word> words = A.finite() ? A.basis() : A.system().enumerate_basis(d);
    if (A.finite()) {
        std::vector<Word> keep;
        for (auto& w : words)
            if (A.alphabet().weight(w) <= d) keep.push_back(w);
        words = keep;
    }
    std::map<std::pair<Word, Word>, std::size_t> index;
    std::vector<Tensor> rows;
    for (auto& w : words) {
        Tensor t;
        for (const auto d = pi.source().delta_word(w); auto& [k, c] : d.terms())
            for (const auto img = pi.apply_word(k.second); auto& [b, cb] : img.terms())
                t.add(k.first, b, f.mul(c, cb));
        t.add(w, Word{}, 1);
        for (auto& [k, c] : t.terms()) index.try_emplace(k, index.size());
        rows.push_back(t);
    }
    Matrix T(f, index.size(), words.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (auto& [k, c] : rows[i].terms()) T.set(index[k], i, c);
    Matrix ker = row_reduce(T).kernel;
    std::vector<Element> out;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
        Element e;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (fe c = ker.at(i, j)) e.add(words[i], c);
        out.push_back(e);
    }
    return out;
}

SequenceReport bounded_sequence_check(const BoundedSequence& s) {
    SequenceReport rep{s.name, {}, 0};
    const HopfMap& pi = *s.pi;
    const Algebra& A = pi.source().algebra();
    const Algebra& B = pi.target().algebra();
    const Field& f = A.field();
    int d = s.degree_bound;
    std::string bound = "degree <= " + std::to_string(d);

    // (i)
    Verdict maps = hopf_morphism_check(pi);
    std::vector<Element> c_in_a;  // spanning set of C in degree <= d
    if (s.iota) {
        maps &= hopf_morphism_check(*s.iota);
        const Algebra& C = s.iota->source().algebra();
        for (int l = 0; l < C.alphabet().size(); ++l) {
            Word w(1, static_cast<char>(l));
            ++maps.checked;
            Element img = pi.apply(s.iota->apply_word(w));
            if (img != Element::scalar(s.iota->source().counit_word(w)))
                maps.fail(pi.name() + " o " + s.iota->name() + " is not trivial on " + C.alphabet()[l].name);
        }
        for (auto& w : C.finite() ? C.basis() : C.system().enumerate_basis(d)) {
            Element img = s.iota->apply_word(w);
            if (weighted_degree(A, img) <= d) c_in_a.push_back(img);
        }
    } else {
        for (auto& c : s.c_gens) {
            ++maps.checked;
            if (pi.apply(c) != Element::scalar(pi.source().counit(c)))
                maps.fail(pi.name() + " is not trivial on " + A.str(c));
        }
        c_in_a = bounded_products(A, s.c_gens, d);
    }
    rep.stages.push_back(from_verdict("maps", maps));

    // (ii) A / A C^+ compared with the image of pi
    {
        Presentation q = A.presentation();
        q.name = A.name() + "-quotient";
        for (auto& [l, r] : s.quotient) q.relations.push_back({l, r, 0});
        Stage st{"quotient", "fail", ""};
        try {
            AlgebraPtr Q = Algebra::from_presentation(q);
            auto image = [&](const Word& w) { return pi.apply_word(w); };  // same alphabet as A
            if (B.finite()) {
                std::vector<Element> gens;
                for (int l : A.generator_letters()) gens.push_back(image(Word(1, static_cast<char>(l))));
                std::size_t target = subalgebra_basis(B, gens).basis.size();
                if (!Q->finite()) {
                    st.detail = "quotient is infinite";
                } else {
                    Matrix M(f, 0, B.dim());
                    for (auto& w : Q->basis()) M.append_row(B.coords(image(w)));
                    std::size_t rk = rank(M);
                    st.detail = "dim quotient " + std::to_string(Q->dim()) + ", image rank " + std::to_string(rk) +
                                ", dim image " + std::to_string(target);
                    if (Q->dim() == target && rk == target) st.status = "pass";
                }
            } else {
                auto qw = Q->finite() ? Q->basis() : Q->system().enumerate_basis(d);
                auto bw = B.system().enumerate_basis(d);
                std::set<Word> bset(bw.begin(), bw.end());
                std::vector<Element> imgs;
                bool inside = true;
                for (auto& w : qw) {
                    if (Q->alphabet().weight(w) > d) continue;
                    imgs.push_back(image(w));
                    for (auto& [u, c] : imgs.back().terms())
                        if (!bset.count(u)) inside = false;
                }
                SparseSpan sp(imgs, f);
                st.detail = std::to_string(imgs.size()) + " quotient monomials, image rank " + std::to_string(sp.dim()) +
                            ", target monomials " + std::to_string(bw.size()) + " in " + bound;
                if (inside && sp.dim() == imgs.size() && imgs.size() == bw.size()) st.status = "bounded-evidence";
            }
        } catch (const std::exception& e) {
            st.detail = e.what();
        }
        rep.stages.push_back(st);
    }

    // (iii) C embeds
    {
        SparseSpan sp(c_in_a, f);
        bool ok = sp.dim() == c_in_a.size();
        rep.stages.push_back({"injective", ok ? "bounded-evidence" : "fail",
                              std::to_string(c_in_a.size()) + " monomials of C, rank " + std::to_string(sp.dim()) +
                                  " in " + bound});
    }

    // (iv) coinvariants
    {
        auto co = bounded_coinvariants(pi, d);
        SparseSpan cs(co, f), ws(c_in_a, f);
        std::string bad;
        for (auto& c : c_in_a)
            if (!cs.contains(c)) {
                bad = A.str(c) + " is not coinvariant";
                break;
            }
        bool ok = bad.empty() && cs.dim() == ws.dim();
        rep.stages.push_back({"coinvariants", ok ? "bounded-evidence" : "fail",
                              bad.empty() ? "dim coinvariants " + std::to_string(cs.dim()) + ", dim C " +
                                                std::to_string(ws.dim()) + " in " + bound
                                          : bad});
    }
    return rep;
}

namespace catalog {

namespace {
Element el(const std::string& preset, const std::string& s) { return Algebra::build(preset)->parse(s); }
}  // namespace

std::vector<Element> k_generators() {
    std::vector<Element> v;
    for (auto s : {"x1", "x21", "g", "w1", "w21"}) v.push_back(el("DH", s));
    return v;
}

std::vector<Element> n_generators() {
    std::vector<Element> v;
    for (auto s : {"x2^4", "x21^2", "g^2", "g^-2", "w2^4", "w21^2", "zeta^2 + zeta"}) v.push_back(el("Dtilde", s));
    return v;
}

const HopfMap& pi_double() {
    static const HopfMap m("pi", Hopf::of("DH"), Hopf::of("um"),
                           {{"x1", "0"}, {"x2", "a"}, {"g", "1"}, {"gamma", "c"}, {"w1", "0"}, {"w2", "b"}});
    return m;
}

const HopfMap& pr_dtilde() {
    static const HopfMap m(
        "pr", Hopf::of("Dtilde"), Hopf::of("DH"),
        {{"x1", "x1"}, {"x2", "x2"}, {"g", "g"}, {"zeta", "gamma"}, {"w1", "w1"}, {"w2", "w2"}});
    return m;
}

const HopfMap& pi_dtilde() {
    static const HopfMap m("pi~", Hopf::of("Dtilde"), Hopf::of("UG"),
                           {{"x1", "0"}, {"x2", "a"}, {"g", "1"}, {"zeta", "c"}, {"w1", "0"}, {"w2", "b"}});
    return m;
}

const HopfMap& iota_middle_row() {
    static const HopfMap m("iota", Hopf::of("OGfrak"), Hopf::of("Dtilde"),
                           {{"Y1", "x1"}, {"X1", "x21"}, {"T", "g"}, {"Y2", "w1"}, {"X2", "w21"}});
    return m;
}

const HopfMap& pi_left_column() {
    static const HopfMap m("pi_K", Hopf::of("OGfrak"), Hopf::of("DH"),
                           {{"Y1", "x1"}, {"X1", "x21"}, {"T", "g"}, {"Y2", "w1"}, {"X2", "w21"}});
    return m;
}

const HopfMap& iota_left_column() {
    static const HopfMap m("iota_G", Hopf::of("OG"), Hopf::of("OGfrak"),
                           {{"X1", "X1^2"}, {"X2", "X2^2"}, {"T", "T^2"}, {"T^-1", "T^-2"}});
    return m;
}

const HopfMap& iota_top_left() {
    static const HopfMap m("iota_N", Hopf::of("OG"), Hopf::of("Dtilde"),
                           {{"X1", "x21^2"}, {"X2", "w21^2"}, {"T", "g^2"}, {"T^-1", "g^-2"}});
    return m;
}

const HopfMap& ug_to_um() {
    static const HopfMap m("q", Hopf::of("UG"), Hopf::of("um"), {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    return m;
}

const HopfMap& um_identity() {
    static const HopfMap m("id", Hopf::of("um"), Hopf::of("um"), {{"a", "a"}, {"b", "b"}, {"c", "c"}});
    return m;
}

}  // namespace catalog

NormalSubalgebraReport check_n_subalgebra(int d) {
    NormalSubalgebraReport rep;
    auto H = Hopf::of("Dtilde");
    const Algebra& A = H->algebra();
    auto gens = catalog::n_generators();
    auto prods = bounded_products(A, gens, d);
    rep.monomials = prods.size();
    SparseSpan span(prods, A.field());
    rep.monomials_independent.checked = prods.size();
    if (span.dim() != prods.size())
        rep.monomials_independent.fail(std::to_string(prods.size()) + " products span only " + std::to_string(span.dim()));
    auto c = check_commutative(A, gens);
    rep.commutative.checked = gens.size() * (gens.size() - 1) / 2;
    if (!c.commutative) rep.commutative.fail(c.witness);
    auto member = [&](const Element& x) { return span.contains(x); };
    rep.adjoint_stable = adjoint_stable(*H, gens, member);
    for (auto& g : gens) {
        ++rep.coproduct_closed.checked;
        Tensor t = H->delta(g);
        if (!tensor_in(t, member, member)) rep.coproduct_closed.fail("delta(" + A.str(g) + ") = " + H->str(t));
    }
    return rep;
}

std::vector<SquareCheck> diagram_check() {
    using namespace catalog;
    std::vector<SquareCheck> out;
    auto compare = [](const std::string& id, const HopfMap& first, const HopfMap& second, const HopfMap& direct,
                      const HopfMap* direct_then = nullptr) {
        SquareCheck sq{id, {}};
        const Alphabet& al = first.source().algebra().alphabet();
        for (int l = 0; l < al.size(); ++l) {
            Word w(1, static_cast<char>(l));
            Element a = second.apply(first.apply_word(w));
            Element b = direct_then ? direct_then->apply(direct.apply_word(w)) : direct.apply_word(w);
            ++sq.v.checked;
            if (a != b)
                sq.v.fail(al[l].name + ": " + second.target().str(a) + " vs " + second.target().str(b));
        }
        return sq;
    };
    // O(G) -> O(Gfrak) -> D~ against O(G) -> N inside D~
    out.push_back(compare("top-left", iota_left_column(), iota_middle_row(), iota_top_left()));
    // O(Gfrak) -> D~ -> D(H) against O(Gfrak) -> K inside D(H)
    out.push_back(compare("bottom-left", iota_middle_row(), pr_dtilde(), pi_left_column()));
    // D~ -> U(G) -> u(m) against D~ -> D(H) -> u(m)
    out.push_back(compare("bottom-right", pi_dtilde(), ug_to_um(), pr_dtilde(), &pi_double()));
    // N -> U(G) lands in the central primitive subalgebra k[a^4, b^4, c^2 + c]
    {
        SquareCheck sq{"top-right", {}};
        auto U = Hopf::of("UG");
        const Algebra& UA = U->algebra();
        std::vector<Element> z{UA.parse("a^4"), UA.parse("b^4"), UA.parse("c^2 + c")};
        auto prods = bounded_products(UA, z, 8);
        SparseSpan span(prods, UA.field());
        for (auto& n : n_generators()) {
            ++sq.v.checked;
            Element img = pi_dtilde().apply(n);
            if (!span.contains(img)) sq.v.fail("image of " + pi_dtilde().source().str(n) + " is " + UA.str(img));
        }
        std::vector<Element> abc{UA.parse("a"), UA.parse("b"), UA.parse("c")};
        for (auto& x : z) {
            for (auto& y : abc) {
                ++sq.v.checked;
                if (UA.mul(x, y) != UA.mul(y, x)) sq.v.fail(UA.str(x) + " is not central");
            }
            ++sq.v.checked;
            Tensor t = U->delta(x), p = Tensor::pure(x, Element::one());
            p += Tensor::pure(Element::one(), x);
            if (t != p) sq.v.fail(UA.str(x) + " is not primitive");
            ++sq.v.checked;
            if (!ug_to_um().apply(x).is_zero()) sq.v.fail(UA.str(x) + " survives in u(m)");
        }
        out.push_back(sq);
    }
    return out;
}

}  // namespace rjd
