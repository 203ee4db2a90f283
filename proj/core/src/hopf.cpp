#include "rjd/hopf.hpp"

#include <random>

#include "rjd/parallel.hpp"

namespace rjd {

namespace {

Element letter_elem(int l) { return Element::word(Word(1, static_cast<char>(l))); }

}  // namespace

Hopf::Hopf(AlgebraPtr a) : a_(std::move(a)) {
    const Alphabet& al = a_->alphabet();
    const Presentation& p = a_->presentation();
    const RewriteSystem& sys = a_->system();
    int n = al.size();
    d_.resize(n);
    e_.assign(n, 0);
    s_.resize(n);
    std::vector<char> done(n, 0);
    auto need = [&](const std::map<std::string, std::string>& m, const std::string& what, const std::string& g) {
        auto it = m.find(g);
        if (it == m.end()) throw InputError(p.name + ": no " + what + " for generator " + g);
        return it->second;
    };
    for (int l = 0; l < n; ++l) {
        const Letter& L = al[l];
        const GeneratorSpec& g = p.gens[L.gen];
        if (L.inverse || g.derived()) continue;
        d_[l] = normal(parse_tensor(al, need(p.hopf.coproduct, "coproduct", g.name), a_->field()));
        e_[l] = sys.normal_form(parse_element(al, need(p.hopf.counit, "counit", g.name))).constant();
        s_[l] = sys.normal_form(parse_element(al, need(p.hopf.antipode, "antipode", g.name)));
        done[l] = 1;
    }
    for (int l = 0; l < n; ++l) {
        const Letter& L = al[l];
        const GeneratorSpec& g = p.gens[L.gen];
        if (!L.inverse) continue;
        int x = al.letter(g.name);
        Tensor gg;
        gg.add(Word(1, static_cast<char>(x)), Word(1, static_cast<char>(x)), 1);
        if (d_[x] != gg) throw InputError(p.name + ": invertible generator " + g.name + " is not grouplike");
        d_[l] = Tensor().add(Word(1, static_cast<char>(l)), Word(1, static_cast<char>(l)), 1);
        e_[l] = 1;
        if (s_[x] == letter_elem(l))
            s_[l] = letter_elem(x);
        else
            throw InputError(p.name + ": antipode of " + g.name + " must be its inverse");
        done[l] = 1;
    }
    for (int l = 0; l < n; ++l) {
        if (done[l]) continue;
        Element def = parse_element(al, p.gens[al[l].gen].definition);
        d_[l] = delta(def);
        e_[l] = counit(def);
        s_[l] = antipode(def);
    }
}

std::shared_ptr<const Hopf> Hopf::of(const std::string& preset) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const Hopf>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[preset];
    if (!slot) slot = std::make_shared<Hopf>(Algebra::build(preset));
    return slot;
}

Tensor Hopf::normal(const Tensor& t) const {
    Tensor out;
    const RewriteSystem& sys = a_->system();
    for (auto& [k, c] : t.terms()) {
        Element l = sys.normal_form(k.first), r = sys.normal_form(k.second);
        for (auto& [a, ca] : l.terms())
            for (auto& [b, cb] : r.terms()) out.add(a, b, a_->field().mul(c, a_->field().mul(ca, cb)));
    }
    return out;
}

Tensor Hopf::tmul(const Tensor& x, const Tensor& y) const {
    Tensor out;
    const RewriteSystem& sys = a_->system();
    const Field& f = a_->field();
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) {
            Element l = sys.mul_word(kx.first, ky.first);
            if (l.is_zero()) continue;
            Element r = sys.mul_word(kx.second, ky.second);
            fe c = f.mul(cx, cy);
            for (auto& [a, ca] : l.terms())
                for (auto& [b, cb] : r.terms()) out.add(a, b, f.mul(c, f.mul(ca, cb)));
        }
    return out;
}

Tensor Hopf::delta_word(const Word& w) const {
    if (w.empty()) return Tensor().add(Word{}, Word{}, 1);
    {
        std::lock_guard lock(mu_);
        auto it = dmemo_.find(w);
        if (it != dmemo_.end()) return it->second;
    }
    Tensor t = w.size() == 1 ? d_[letter_at(w, 0)] : tmul(delta_word(w.substr(0, w.size() - 1)), d_[letter_at(w, w.size() - 1)]);
    std::lock_guard lock(mu_);
    dmemo_.emplace(w, t);
    return t;
}

Tensor Hopf::delta(const Element& x) const {
    Tensor out;
    for (auto& [w, c] : x.terms()) {
        Tensor t = delta_word(w);
        for (auto& [k, v] : t.terms()) out.add(k.first, k.second, a_->field().mul(c, v));
    }
    return out;
}

fe Hopf::counit_word(const Word& w) const {
    fe r = 1;
    for (std::size_t i = 0; i < w.size() && r; ++i) r = a_->field().mul(r, e_[letter_at(w, i)]);
    return r;
}

fe Hopf::counit(const Element& x) const {
    fe r = 0;
    for (auto& [w, c] : x.terms()) r ^= a_->field().mul(c, counit_word(w));
    return r;
}

Element Hopf::antipode_word(const Word& w) const {
    if (w.empty()) return Element::one();
    {
        std::lock_guard lock(mu_);
        auto it = smemo_.find(w);
        if (it != smemo_.end()) return it->second;
    }
    Element s = w.size() == 1 ? s_[letter_at(w, 0)]
                              : a_->mul(s_[letter_at(w, w.size() - 1)], antipode_word(w.substr(0, w.size() - 1)));
    std::lock_guard lock(mu_);
    smemo_.emplace(w, s);
    return s;
}

Element Hopf::antipode(const Element& x) const {
    Element out;
    for (auto& [w, c] : x.terms()) out += antipode_word(w).scaled(a_->field(), c);
    return out;
}

Element Hopf::multiply(const Tensor& t) const {
    const RewriteSystem& sys = a_->system();
    Element out;
    for (auto& [k, c] : t.terms())
        out += a_->mul(sys.normal_form(k.first), sys.normal_form(k.second)).scaled(a_->field(), c);
    return out;
}

Tensor3 Hopf::delta_left(const Tensor& t) const {
    Tensor3 out;
    for (auto& [k, c] : t.terms())
        for (const auto tmp_ = delta_word(k.first); auto& [k2, c2] : tmp_.terms()) {
            std::string key = k2.first + '\xff' + k2.second + '\xff' + k.second;
            fe v = out[key] ^= a_->field().mul(c, c2);
            if (!v) out.erase(key);
        }
    return out;
}

Tensor3 Hopf::delta_right(const Tensor& t) const {
    Tensor3 out;
    for (auto& [k, c] : t.terms())
        for (const auto tmp_ = delta_word(k.second); auto& [k2, c2] : tmp_.terms()) {
            std::string key = k.first + '\xff' + k2.first + '\xff' + k2.second;
            fe v = out[key] ^= a_->field().mul(c, c2);
            if (!v) out.erase(key);
        }
    return out;
}

std::vector<Word> sample_words(const Algebra& a, std::size_t samples, int degree_bound, unsigned seed) {
    std::vector<Word> pool = a.finite() ? a.basis() : a.system().enumerate_basis(degree_bound);
    if (pool.size() <= samples) return pool;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    std::vector<Word> out;
    for (std::size_t i = 0; i < samples; ++i) out.push_back(pool[d(rng)]);
    return out;
}

HopfAxiomReport check_hopf_axioms(const Hopf& h, std::size_t samples, int degree_bound, unsigned seed) {
    HopfAxiomReport rep;
    const Algebra& a = h.algebra();
    const Alphabet& al = a.alphabet();
    const Field& f = a.field();
    for (auto& [label, r] : a.relations()) {
        ++rep.well_defined.checked;
        Tensor d = h.delta(r);
        if (!d.is_zero()) rep.well_defined.fail("delta(" + label + ") = " + h.str(d));
        if (h.counit(r)) rep.well_defined.fail("eps(" + label + ") != 0");
        Element s = h.antipode(r);
        if (!s.is_zero()) rep.well_defined.fail("S(" + label + ") = " + h.str(s));
    }
    std::vector<Word> dom;
    std::vector<int> gens = a.generator_letters();
    for (int l = 0; l < al.size(); ++l)
        if (al[l].inverse) gens.push_back(l);
    if (a.finite()) {
        dom = a.basis();
    } else {
        for (int l : gens) dom.push_back(Word(1, static_cast<char>(l)));
        auto s = sample_words(a, samples, degree_bound, seed);
        dom.insert(dom.end(), s.begin(), s.end());
    }
    rep.domain = dom.size();
    struct Local {
        Verdict coassociative, counital, multiplicative, antipode;
    };
    std::vector<Local> res(dom.size());
    parallel_for(dom.size(), [&](std::size_t i) {
        const Word& w = dom[i];
        Local& L = res[i];
        Element x = Element::word(w);
        std::string ws = al.str(w);
        Tensor t = h.delta_word(w);
        ++L.coassociative.checked;
        if (h.delta_left(t) != h.delta_right(t)) L.coassociative.fail("coassociativity fails on " + ws);
        Element l, r, sl, sr;
        for (auto& [k, c] : t.terms()) {
            if (fe e = h.counit_word(k.first)) l += Element::word(k.second, f.mul(c, e));
            if (fe e = h.counit_word(k.second)) r += Element::word(k.first, f.mul(c, e));
            sl += a.mul(h.antipode_word(k.first), Element::word(k.second)).scaled(f, c);
            sr += a.mul(Element::word(k.first), h.antipode_word(k.second)).scaled(f, c);
        }
        ++L.counital.checked;
        if (l != x || r != x) L.counital.fail("counit law fails on " + ws);
        ++L.antipode.checked;
        Element e = Element::scalar(h.counit_word(w));
        if (sl != e || sr != e) L.antipode.fail("antipode axiom fails on " + ws);
        for (int g : gens) {
            ++L.multiplicative.checked;
            Word gw(1, static_cast<char>(g));
            if (h.delta(a.system().mul_word(w, gw)) != h.tmul(t, h.delta_word(gw)))
                L.multiplicative.fail("delta(" + ws + " " + al[g].name + ") != delta(" + ws + ") delta(" + al[g].name + ")");
        }
    });
    for (auto& L : res) {
        rep.coassociative &= L.coassociative;
        rep.counital &= L.counital;
        rep.multiplicative &= L.multiplicative;
        rep.antipode &= L.antipode;
    }
    return rep;
}

Verdict check_antipode_power(const Hopf& h, int k, const std::vector<Word>& words,
                             const std::function<Element(const Element&)>& conj) {
    Verdict v;
    for (const Word& w : words) {
        ++v.checked;
        Element x = Element::word(w), y = x;
        for (int i = 0; i < k; ++i) y = h.antipode(y);
        Element want = conj ? conj(x) : x;
        if (y != want)
            v.fail("S^" + std::to_string(k) + "(" + h.str(x) + ") = " + h.str(y) + ", expected " + h.str(want));
    }
    return v;
}

SparseSpan::SparseSpan(const std::vector<Element>& gens, const Field& f) : f_(f) {
    for (auto& g : gens)
        for (auto& [w, c] : g.terms()) index_.try_emplace(w, index_.size());
    Matrix m(f_, gens.size(), index_.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (auto& [w, c] : gens[i].terms()) m.set(i, index_[w], c);
    sub_ = Subspace::span(m);
    rank_ = sub_->dim();
}

bool SparseSpan::contains(const Element& x) const {
    Matrix v(f_, 1, index_.size());
    for (auto& [w, c] : x.terms()) {
        auto it = index_.find(w);
        if (it == index_.end()) return false;
        v.set(0, it->second, c);
    }
    return !sub_ || sub_->contains(v);
}

Element adjoint(const Hopf& h, const Element& by, const Element& x) {
    const Algebra& a = h.algebra();
    Element out;
    for (const auto tmp_ = h.delta(by); auto& [k, c] : tmp_.terms())
        out += a.mul(a.mul(Element::word(k.first), x), h.antipode_word(k.second)).scaled(a.field(), c);
    return out;
}

Verdict adjoint_stable(const Hopf& h, const std::vector<Element>& xs,
                       const std::function<bool(const Element&)>& member) {
    Verdict v;
    const Alphabet& al = h.algebra().alphabet();
    std::vector<int> gens = h.algebra().generator_letters();
    for (int l = 0; l < al.size(); ++l)
        if (al[l].inverse) gens.push_back(l);
    for (int g : gens)
        for (auto& x : xs) {
            ++v.checked;
            Element y = adjoint(h, letter_elem(g), x);
            if (!member(y)) v.fail("ad(" + al[g].name + ")(" + h.str(x) + ") = " + h.str(y) + " leaves the span");
        }
    return v;
}

bool tensor_in(const Tensor& t, const std::function<bool(const Element&)>& left,
               const std::function<bool(const Element&)>& right) {
    std::map<Word, Element> by_right, by_left;
    for (auto& [k, c] : t.terms()) {
        by_right[k.second].add(k.first, c);
        by_left[k.first].add(k.second, c);
    }
    for (auto& [w, e] : by_right)
        if (!left(e)) return false;
    for (auto& [w, e] : by_left)
        if (!right(e)) return false;
    return true;
}

IntegralSpaces integral_spaces(const Hopf& h) {
    const Algebra& a = h.algebra();
    std::size_t n = a.dim();
    const Field& f = a.field();
    auto solve = [&](bool left) {
        Matrix sys(f, 0, n);
        for (int g : a.generator_letters()) {
            Element x = letter_elem(g);
            Matrix m = left ? a.left_mult(x) : a.right_mult(x);
            if (fe e = h.counit(x)) m += Matrix::identity(f, n).scaled(e);
            sys = Matrix::vstack(sys, m);
        }
        return Subspace::span(row_reduce(sys).kernel.transposed());
    };
    IntegralSpaces s{solve(true), solve(false)};
    s.unimodular = s.left == s.right;
    return s;
}

HopfMap::HopfMap(std::string name, HopfPtr src, HopfPtr dst, const std::map<std::string, std::string>& images)
    : name_(std::move(name)), src_(std::move(src)), dst_(std::move(dst)) {
    const Alphabet& sa = src_->algebra().alphabet();
    const Presentation& sp = src_->algebra().presentation();
    const Algebra& T = dst_->algebra();
    int n = sa.size();
    letters_.resize(n);
    std::vector<char> done(n, 0);
    for (int l = 0; l < n; ++l) {
        const Letter& L = sa[l];
        auto it = images.find(L.name);
        if (it != images.end()) {
            letters_[l] = T.parse(it->second);
            done[l] = 1;
        } else if (!L.inverse && !sp.gens[L.gen].derived()) {
            throw InputError(name_ + ": no image for generator " + L.name);
        }
    }
    for (int l = 0; l < n; ++l) {
        const Letter& L = sa[l];
        if (done[l] || !L.inverse) continue;
        Element t = letters_[sa.letter(sp.gens[L.gen].name)];
        if (t == Element::one()) {
            letters_[l] = t;
        } else if (t.size() == 1 && t.terms().begin()->first.size() == 1 && t.terms().begin()->second == 1 &&
                   T.alphabet().find(T.alphabet()[letter_at(t.terms().begin()->first, 0)].name + "^-1")) {
            letters_[l] = T.letter(T.alphabet()[letter_at(t.terms().begin()->first, 0)].name + "^-1");
        } else if (T.finite()) {
            auto inv = invert(T.left_mult(t));
            if (!inv) throw InputError(name_ + ": image of " + L.name + " is not invertible");
            letters_[l] = T.element((*inv * T.coords(Element::one()).transposed()).transposed());
        } else {
            throw InputError(name_ + ": cannot invert the image of " + sp.gens[L.gen].name);
        }
        done[l] = 1;
    }
    for (int l = 0; l < n; ++l)
        if (!done[l]) letters_[l] = apply(parse_element(sa, sp.gens[sa[l].gen].definition));
}

Element HopfMap::apply_word(const Word& w) const {
    if (w.empty()) return Element::one();
    {
        std::lock_guard lock(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Element r = w.size() == 1
                    ? letters_[letter_at(w, 0)]
                    : dst_->algebra().mul(apply_word(w.substr(0, w.size() - 1)), letters_[letter_at(w, w.size() - 1)]);
    std::lock_guard lock(mu_);
    memo_.emplace(w, r);
    return r;
}

Element HopfMap::apply(const Element& x) const {
    Element out;
    for (auto& [w, c] : x.terms()) out += apply_word(w).scaled(dst_->algebra().field(), c);
    return out;
}

Tensor HopfMap::apply(const Tensor& t) const {
    Tensor out;
    const Field& f = dst_->algebra().field();
    for (auto& [k, c] : t.terms()) {
        Tensor p = Tensor::pure(apply_word(k.first), apply_word(k.second), f);
        for (auto& [kk, cc] : p.terms()) out.add(kk.first, kk.second, f.mul(c, cc));
    }
    return out;
}

Element HopfMap::image(const std::string& gen) const { return letters_[src_->algebra().alphabet().letter(gen)]; }

Verdict hopf_morphism_check(const HopfMap& f) {
    Verdict v;
    const Algebra& S = f.source().algebra();
    const Alphabet& al = S.alphabet();
    for (auto& [label, r] : S.relations()) {
        ++v.checked;
        Element y = f.apply(r);
        if (!y.is_zero()) v.fail(f.name() + " does not kill " + label + ": image " + f.target().str(y));
    }
    for (int l = 0; l < al.size(); ++l) {
        Word w(1, static_cast<char>(l));
        Element x = Element::word(w);
        const std::string& n = al[l].name;
        ++v.checked;
        Tensor lhs = f.target().delta(f.apply(x)), rhs = f.apply(f.source().delta_word(w));
        if (lhs != rhs)
            v.fail("delta(" + f.name() + "(" + n + ")) = " + f.target().str(lhs) + " but (f@f)delta(" + n +
                   ") = " + f.target().str(rhs));
        if (f.target().counit(f.apply(x)) != f.source().counit_word(w)) v.fail("counit differs on " + n);
        if (f.apply(f.source().antipode_word(w)) != f.target().antipode(f.apply(x)))
            v.fail("antipode differs on " + n);
    }
    return v;
}

Pairing::Pairing(HopfPtr h, HopfPtr k, const std::map<std::pair<std::string, std::string>, fe>& table,
                 int exponent_bound)
    : h_(std::move(h)), k_(std::move(k)), bound_(exponent_bound) {
    for (auto& [key, v] : table)
        table_[{h_->algebra().alphabet().letter(key.first), k_->algebra().alphabet().letter(key.second)}] = v;
}

Element Pairing::expand(const Hopf& side, const Word& w) const {
    const Alphabet& al = side.algebra().alphabet();
    const Presentation& p = side.algebra().presentation();
    Element e = Element::one();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter& L = al[letter_at(w, i)];
        Element x = !L.inverse && p.gens[L.gen].derived() ? parse_element(al, p.gens[L.gen].definition)
                                                          : letter_elem(letter_at(w, i));
        e = e.concat(side.algebra().field(), x);
    }
    return e;
}

fe Pairing::value(const Word& h, const Word& k) const {
    if (static_cast<int>(h.size()) > bound_ || static_cast<int>(k.size()) > bound_)
        throw ResourceError("pairing argument exceeds the exponent bound " + std::to_string(bound_));
    if (h.empty()) return k_->counit_word(k);
    if (k.empty()) return h_->counit_word(h);
    {
        std::lock_guard lock(mu_);
        auto it = memo_.find({h, k});
        if (it != memo_.end()) return it->second;
    }
    const Field& f = h_->algebra().field();
    fe r = 0;
    if (h.size() == 1 && k.size() == 1) {
        auto it = table_.find({letter_at(h, 0), letter_at(k, 0)});
        if (it == table_.end())
            throw InputError("pairing has no value on " + h_->algebra().alphabet().str(h) + " @ " +
                             k_->algebra().alphabet().str(k));
        r = it->second;
    } else if (h.size() > 1) {
        // tau(h' l (x) k) = tau(h' (x) k1) tau(l (x) k2)
        Word hp = h.substr(0, h.size() - 1), l = h.substr(h.size() - 1);
        for (const auto tmp_ = k_->delta(expand(*k_, k)); auto& [kk, c] : tmp_.terms()) {
            fe a = (*this)(Element::word(hp), expand(*k_, kk.first));
            if (!a) continue;
            r ^= f.mul(c, f.mul(a, (*this)(Element::word(l), expand(*k_, kk.second))));
        }
    } else {
        // tau(l (x) k' m) = tau(l1 (x) m) tau(l2 (x) k')
        Word kp = k.substr(0, k.size() - 1), m = k.substr(k.size() - 1);
        for (const auto tmp_ = h_->delta(expand(*h_, h)); auto& [hh, c] : tmp_.terms()) {
            fe a = (*this)(expand(*h_, hh.first), Element::word(m));
            if (!a) continue;
            r ^= f.mul(c, f.mul(a, (*this)(expand(*h_, hh.second), Element::word(kp))));
        }
    }
    std::lock_guard lock(mu_);
    memo_.emplace(std::make_pair(h, k), r);
    return r;
}

fe Pairing::operator()(const Element& h, const Element& k) const {
    const Field& f = h_->algebra().field();
    fe r = 0;
    for (auto& [hw, hc] : h.terms()) {
        Element he = expand(*h_, hw);
        for (auto& [kw, kc] : k.terms()) {
            Element ke = expand(*k_, kw);
            for (auto& [a, ca] : he.terms())
                for (auto& [b, cb] : ke.terms())
                    r ^= f.mul(f.mul(hc, kc), f.mul(f.mul(ca, cb), value(a, b)));
        }
    }
    return r;
}

PairingReport check_pairing_axioms(const Pairing& tau, std::size_t samples, int degree_bound, unsigned seed) {
    PairingReport rep;
    const Hopf& H = tau.left();
    const Hopf& K = tau.right();
    const Field& f = H.algebra().field();
    auto hs = sample_words(H.algebra(), samples, degree_bound, seed);
    auto hs2 = sample_words(H.algebra(), samples, degree_bound, seed + 1);
    auto ks = sample_words(K.algebra(), samples, degree_bound, seed + 2);
    auto ks2 = sample_words(K.algebra(), samples, degree_bound, seed + 3);
    auto pair_str = [&](const Word& h, const Word& k) {
        return H.algebra().alphabet().str(h) + " @ " + K.algebra().alphabet().str(k);
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const Word& h = hs[i % hs.size()];
        const Word& hp = hs2[i % hs2.size()];
        const Word& k = ks[i % ks.size()];
        const Word& kp = ks2[i % ks2.size()];
        Element eh = Element::word(h), ehp = Element::word(hp), ek = Element::word(k), ekp = Element::word(kp);
        // left: tau(h h' (x) k)
        fe lhs = tau(H.algebra().mul(eh, ehp), ek), rhs = 0;
        for (const auto tmp_ = K.delta_word(k); auto& [kk, c] : tmp_.terms())
            rhs ^= f.mul(c, f.mul(tau(eh, Element::word(kk.first)), tau(ehp, Element::word(kk.second))));
        ++rep.left_mult.checked;
        if (lhs != rhs) rep.left_mult.fail("product in the first slot fails on (" + pair_str(h, k) + "), h' = " +
                                           H.algebra().alphabet().str(hp));
        // right: tau(h (x) k' k)
        lhs = tau(eh, K.algebra().mul(ekp, ek));
        rhs = 0;
        for (const auto tmp_ = H.delta_word(h); auto& [hh, c] : tmp_.terms())
            rhs ^= f.mul(c, f.mul(tau(Element::word(hh.first), ek), tau(Element::word(hh.second), ekp)));
        ++rep.right_mult.checked;
        if (lhs != rhs) rep.right_mult.fail("product in the second slot fails on (" + pair_str(h, k) + "), k' = " +
                                            K.algebra().alphabet().str(kp));
        rep.units.checked += 2;
        if (tau(Element::one(), ek) != K.counit_word(k)) rep.units.fail("tau(1 @ k) != eps(k) for " + pair_str({}, k));
        if (tau(eh, Element::one()) != H.counit_word(h)) rep.units.fail("tau(h @ 1) != eps(h) for " + pair_str(h, {}));
    }
    return rep;
}

Pairing dtilde_pairing() {
    std::map<std::pair<std::string, std::string>, fe> t;
    for (std::string h : {"x1", "x2", "g", "g^-1"})
        for (std::string k : {"w1", "w2", "zeta"}) t[{h, k}] = 0;
    t[{"x1", "w2"}] = 1;
    t[{"x2", "w1"}] = 1;
    t[{"g", "zeta"}] = 1;
    t[{"g^-1", "zeta"}] = 1;
    return Pairing(Hopf::of("Htilde"), Hopf::of("Ktilde"), t);
}

}  // namespace rjd
