#include "rjd/algebras.hpp"

#include <cctype>
#include <map>
#include <random>
#include <sstream>

namespace rjd {

Algebra::Algebra(Presentation p, Completion c)
    : p_(std::move(p)), sys_(std::move(c.system)), report_(std::move(c.report)) {
    finite_ = sys_->finite();
    if (finite_) {
        basis_ = sys_->enumerate_basis();
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
    }
}

AlgebraPtr Algebra::from_presentation(Presentation p, const CompletionOptions& opt) {
    Completion c = complete(p, opt);
    if (!c.report.confluent()) throw ConfluenceError(p.name + ": " + c.report.summary());
    return AlgebraPtr(new Algebra(std::move(p), std::move(c)));
}

AlgebraPtr Algebra::build(const std::string& preset, const CompletionOptions& opt) {
    static std::mutex mu;
    static std::map<std::pair<std::string, int>, AlgebraPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{preset, opt.exponent_bound}];
    if (!slot) slot = from_presentation(load_preset(preset), opt);
    return slot;
}

std::size_t Algebra::dim() const {
    if (!finite_) throw InputError(name() + " is infinite-dimensional");
    return basis_.size();
}

const std::vector<Word>& Algebra::basis() const {
    if (!finite_) throw InputError(name() + " is infinite-dimensional");
    return basis_;
}

std::optional<std::size_t> Algebra::index(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Element Algebra::letter(const std::string& n) const {
    return Element::word(Word(1, static_cast<char>(alphabet().letter(n))));
}

std::vector<int> Algebra::generator_letters() const {
    std::vector<int> out;
    for (auto& g : p_.gens)
        if (!g.derived()) out.push_back(alphabet().letter(g.name));
    return out;
}

std::vector<std::pair<std::string, Element>> Algebra::relations() const { return defining_relations(p_, alphabet()); }

Matrix Algebra::coords(const Element& e) const {
    Matrix m(field(), 1, dim());
    for (auto& [w, c] : e.terms()) {
        auto i = index(w);
        if (!i) throw std::logic_error("word " + alphabet().str(w) + " is not in normal form");
        m.set(0, *i, c);
    }
    return m;
}

Element Algebra::element(const Matrix& row, std::size_t r) const {
    Element e;
    for (std::size_t i = 0; i < dim(); ++i)
        if (fe c = row.at(r, i)) e.add(basis_[i], c);
    return e;
}

Matrix Algebra::left_mult(const Element& x) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto tmp_ = mul(x, Element::word(basis_[j])); auto& [w, c] : tmp_.terms()) m.set(*index(w), j, c);
    return m;
}

Matrix Algebra::right_mult(const Element& x) const {
    Matrix m(field(), dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (const auto tmp_ = mul(Element::word(basis_[j]), x); auto& [w, c] : tmp_.terms()) m.set(*index(w), j, c);
    return m;
}

const Matrix& Module::act(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return gens[i];
    throw InputError("module has no generator '" + name + "'");
}

FDAlgebra::FDAlgebra(std::string name, Field f, std::vector<std::string> labels, Matrix unit,
                     std::vector<std::string> gen_names, std::vector<Matrix> gen_rows, Product prod, Evaluator eval)
    : name_(std::move(name)), f_(std::move(f)), labels_(std::move(labels)), unit_(std::move(unit)),
      gen_names_(std::move(gen_names)), gen_rows_(std::move(gen_rows)), prod_(std::move(prod)),
      eval_(std::move(eval)) {
    if (dim() <= 64) cache_.resize(dim() * dim());
}

Matrix FDAlgebra::product(std::size_t i, std::size_t j) const {
    if (cache_.empty()) return prod_(i, j);
    std::size_t k = i * dim() + j;
    {
        std::lock_guard lock(mu_);
        if (cache_[k]) return *cache_[k];
    }
    Matrix p = prod_(i, j);
    std::lock_guard lock(mu_);
    cache_[k] = p;
    return p;
}

Matrix FDAlgebra::basis_row(std::size_t i) const {
    Matrix m(f_, 1, dim());
    m.set(0, i, 1);
    return m;
}

Matrix FDAlgebra::mul(const Matrix& x, const Matrix& y, std::size_t rx, std::size_t ry) const {
    Matrix out(f_, 1, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        fe a = x.at(rx, i);
        if (!a) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            fe b = y.at(ry, j);
            if (b) out.add_row_from(0, product(i, j), 0, f_.mul(a, b));
        }
    }
    return out;
}

Matrix FDAlgebra::left_mult(const Matrix& x, std::size_t r) const {
    Matrix t(f_, dim(), dim());  // rows are images, transposed below
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t i = 0; i < dim(); ++i)
            if (fe a = x.at(r, i)) t.add_row_from(j, product(i, j), 0, a);
    return t.transposed();
}

Matrix FDAlgebra::right_mult(const Matrix& x, std::size_t r) const {
    Matrix t(f_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t i = 0; i < dim(); ++i)
            if (fe a = x.at(r, i)) t.add_row_from(j, product(j, i), 0, a);
    return t.transposed();
}

Matrix FDAlgebra::eval(const Module& m, const Matrix& x, std::size_t r) const {
    Matrix out(m.field, m.dim, m.dim);
    for (std::size_t i = 0; i < dim(); ++i)
        if (fe a = x.at(r, i)) out += eval_basis(m, i).scaled(a);
    return out;
}

Module FDAlgebra::regular() const {
    Module m{f_, dim(), gen_names_, {}, name_ + " regular"};
    for (auto& g : gen_rows_) m.gens.push_back(left_mult(g));
    return m;
}

Matrix eval_word(const Algebra& a, const Module& m, const Word& w) {
    const Alphabet& al = a.alphabet();
    Matrix r = Matrix::identity(m.field, m.dim);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter& l = al[letter_at(w, i)];
        const GeneratorSpec& g = a.presentation().gens[l.gen];
        Matrix x;
        if (l.inverse) {
            auto inv = invert(m.act(g.name));
            if (!inv) throw std::logic_error("invertible generator acts singularly");
            x = *inv;
        } else if (g.derived()) {
            Element d = parse_element(al, g.definition);
            x = Matrix(m.field, m.dim, m.dim);
            for (auto& [dw, c] : d.terms()) x += eval_word(a, m, dw).scaled(c);
        } else {
            x = m.act(g.name);
        }
        r = r * x;
    }
    return r;
}

Matrix evaluate(const Algebra& a, const Module& m, const Element& x) {
    Matrix r(m.field, m.dim, m.dim);
    for (const auto& [w, c] : x.terms()) r += eval_word(a, m, w).scaled(c);
    return r;
}

std::shared_ptr<const FDAlgebra> FDAlgebra::of(const AlgebraPtr& a) {
    std::vector<std::string> labels;
    for (auto& w : a->basis()) labels.push_back(a->alphabet().str(w));
    std::vector<std::string> gn;
    std::vector<Matrix> gr;
    for (int l : a->generator_letters()) {
        gn.push_back(a->alphabet()[l].name);
        gr.push_back(a->coords(Element::word(Word(1, static_cast<char>(l)))));
    }
    auto prod = [a](std::size_t i, std::size_t j) {
        return a->coords(a->system().mul_word(a->basis()[i], a->basis()[j]));
    };
    auto ev = [a](const Module& m, std::size_t i) { return eval_word(*a, m, a->basis()[i]); };
    return std::make_shared<FDAlgebra>(a->name(), a->field(), labels, a->coords(Element::one()), gn, gr, prod, ev);
}

Subalgebra subalgebra_basis(const Algebra& a, const std::vector<Element>& gens) {
    Subalgebra s{Subspace(a.field(), a.dim()), {}};
    auto push = [&](const Element& x) {
        if (s.span.insert(a.coords(x))) s.basis.push_back(x);
    };
    push(Element::one());
    for (std::size_t i = 0; i < s.basis.size(); ++i)
        for (auto& g : gens) push(a.mul(g, s.basis[i]));
    return s;
}

CommutativityResult check_commutative(const Algebra& a, const std::vector<Element>& elems) {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (a.mul(elems[i], elems[j]) != a.mul(elems[j], elems[i]))
                return {false, "(" + a.str(elems[i]) + ")(" + a.str(elems[j]) + ") != (" + a.str(elems[j]) + ")(" +
                                   a.str(elems[i]) + ")"};
    return {};
}

RestrictedLieData RestrictedLieData::m() {
    RestrictedLieData L;
    L.basis = {"b'", "b", "c", "a", "a'"};
    std::size_t n = 5;
    L.bracket.assign(n, std::vector<std::vector<fe>>(n, std::vector<fe>(n, 0)));
    L.two_op.assign(n, std::vector<fe>(n, 0));
    auto set = [&](const char* x, const char* y, const char* z) {
        auto i = L.index(x), j = L.index(y), k = L.index(z);
        L.bracket[i][j][k] = L.bracket[j][i][k] = 1;
    };
    set("a", "b", "c");
    set("a", "c", "a");
    set("b", "c", "b");
    set("a'", "b", "a");
    set("a'", "b'", "c");
    set("a", "b'", "b");
    L.two_op[L.index("c")][L.index("c")] = 1;
    L.two_op[L.index("a")][L.index("a'")] = 1;
    L.two_op[L.index("b")][L.index("b'")] = 1;
    return L;
}

std::size_t RestrictedLieData::index(const std::string& s) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == s) return i;
    throw InputError("unknown Lie basis symbol " + s);
}

std::vector<fe> RestrictedLieData::br(const Field& f, const std::vector<fe>& x, const std::vector<fe>& y) const {
    std::vector<fe> z(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            fe c = f.mul(x[i], y[j]);
            if (!c) continue;
            for (std::size_t k = 0; k < dim(); ++k)
                if (bracket[i][j][k]) z[k] ^= c;
        }
    return z;
}

std::vector<fe> RestrictedLieData::p2(const Field& f, const std::vector<fe>& x) const {
    std::vector<fe> z(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        fe s = f.mul(x[i], x[i]);
        for (std::size_t k = 0; k < dim(); ++k)
            if (two_op[i][k]) z[k] ^= s;
        for (std::size_t j = i + 1; j < dim(); ++j) {
            fe c = f.mul(x[i], x[j]);
            for (std::size_t k = 0; k < dim(); ++k)
                if (bracket[i][j][k]) z[k] ^= c;
        }
    }
    return z;
}

namespace {
std::string vec_str(const RestrictedLieData& L, const Field& f, const std::vector<fe>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) s += (s.empty() ? "" : "+") + (v[i] == 1 ? "" : "(" + f.str(v[i]) + ")") + L.basis[i];
    return s.empty() ? "0" : s;
}
std::vector<fe> unit_vec(std::size_t n, std::size_t i) {
    std::vector<fe> v(n, 0);
    v[i] = 1;
    return v;
}
std::vector<fe> add(std::vector<fe> a, const std::vector<fe>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return a;
}
}  // namespace

std::vector<std::string> RestrictedLieData::check_axioms(const Field& f, int samples, unsigned seed) const {
    std::vector<std::string> bad;
    std::size_t n = dim();
    std::vector<std::vector<fe>> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
    for (std::size_t i = 0; i < n; ++i) {
        if (br(f, e[i], e[i]) != std::vector<fe>(n, 0)) bad.push_back("[" + basis[i] + "," + basis[i] + "] != 0");
        for (std::size_t j = 0; j < n; ++j) {
            if (br(f, p2(f, e[i]), e[j]) != br(f, e[i], br(f, e[i], e[j])))
                bad.push_back("ad(" + basis[i] + "^[2]) != ad(" + basis[i] + ")^2 on " + basis[j]);
            for (std::size_t k = 0; k < n; ++k) {
                auto jac = add(add(br(f, e[i], br(f, e[j], e[k])), br(f, e[j], br(f, e[k], e[i]))),
                               br(f, e[k], br(f, e[i], e[j])));
                if (jac != std::vector<fe>(n, 0))
                    bad.push_back("Jacobi fails on " + basis[i] + "," + basis[j] + "," + basis[k]);
            }
        }
    }
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(0, static_cast<int>(f.size()) - 1);
    auto rnd = [&] {
        std::vector<fe> v(n);
        for (auto& c : v) c = static_cast<fe>(d(rng));
        return v;
    };
    for (int s = 0; s < samples; ++s) {
        auto x = rnd(), y = rnd();
        fe lam = static_cast<fe>(d(rng));
        std::vector<fe> lx(n);
        for (std::size_t i = 0; i < n; ++i) lx[i] = f.mul(lam, x[i]);
        std::vector<fe> rhs = p2(f, x);
        for (auto& c : rhs) c = f.mul(f.mul(lam, lam), c);
        if (p2(f, lx) != rhs) bad.push_back("(lx)^[2] != l^2 x^[2] at x=" + vec_str(*this, f, x));
        if (p2(f, add(x, y)) != add(add(p2(f, x), p2(f, y)), br(f, x, y)))
            bad.push_back("(x+y)^[2] fails at x=" + vec_str(*this, f, x));
        if (br(f, p2(f, x), y) != br(f, x, br(f, x, y)))
            bad.push_back("ad(x^[2]) != ad(x)^2 at x=" + vec_str(*this, f, x));
    }
    return bad;
}

LieCheck check_lie_automorphism(const std::vector<std::vector<fe>>& phi, const RestrictedLieData& L, const Field& f) {
    std::size_t n = L.dim();
    auto apply = [&](const std::vector<fe>& v) {
        std::vector<fe> z(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) z[k] ^= f.mul(v[i], phi[i][k]);
        return z;
    };
    for (std::size_t i = 0; i < n; ++i) {
        auto ei = unit_vec(n, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            auto ej = unit_vec(n, j);
            auto lhs = apply(L.br(f, ei, ej));
            auto rhs = L.br(f, phi[i], phi[j]);
            if (lhs != rhs)
                return {false, "phi([" + L.basis[i] + "," + L.basis[j] + "]) = " + vec_str(L, f, lhs) +
                                   " but [phi " + L.basis[i] + ", phi " + L.basis[j] + "] = " + vec_str(L, f, rhs)};
        }
        auto lhs = apply(L.p2(f, ei));
        auto rhs = L.p2(f, phi[i]);
        if (lhs != rhs)
            return {false, "phi(" + L.basis[i] + "^[2]) = " + vec_str(L, f, lhs) + " but (phi " + L.basis[i] +
                               ")^[2] = " + vec_str(L, f, rhs)};
    }
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) m.set(i, k, phi[i][k]);
    if (!invert(m)) return {false, "phi is not bijective"};
    return {};
}

std::vector<std::vector<fe>> phi_matrix(const Field& f, fe kappa, fe lambda, fe mu, fe zeta) {
    auto L = RestrictedLieData::m();
    std::size_t bp = L.index("b'"), b = L.index("b"), c = L.index("c"), a = L.index("a"), ap = L.index("a'");
    std::vector<std::vector<fe>> phi(5, std::vector<fe>(5, 0));
    phi[a][a] = kappa;
    phi[a][b] = lambda;
    phi[b][a] = mu;
    phi[b][b] = zeta;
    phi[c][c] = 1;
    phi[ap][ap] = f.mul(kappa, kappa);
    phi[ap][bp] = f.mul(lambda, lambda);
    phi[ap][c] = f.mul(kappa, lambda);
    phi[bp][ap] = f.mul(mu, mu);
    phi[bp][bp] = f.mul(zeta, zeta);
    phi[bp][c] = f.mul(mu, zeta);
    return phi;
}

QuiverData QuiverData::bound_quiver() {
    QuiverData q;
    q.arrows = {{"al1", 0, 1}, {"al2", 0, 1}, {"be1", 1, 0}, {"be2", 1, 0}};
    int a1 = 0, a2 = 1, b1 = 2, b2 = 3;
    q.relations = {{{a1, b1}}, {{a2, b2}}, {{b1, a1}}, {{b2, a2}}, {{a1, b2}, {a2, b1}}, {{b1, a2}, {b2, a1}}};
    return q;
}

int QuiverData::arrow(const std::string& n) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == n) return static_cast<int>(i);
    throw InputError("unknown arrow " + n);
}

bool QuiverData::zero_relation(const std::vector<int>& path) const {
    for (auto& r : relations) {
        if (r.size() != 1) continue;
        const auto& z = r[0];
        if (z.size() > path.size()) continue;
        for (std::size_t s = 0; s + z.size() <= path.size(); ++s)
            if (std::equal(z.begin(), z.end(), path.begin() + static_cast<long>(s))) return true;
    }
    return false;
}

std::optional<std::vector<int>> QuiverData::binomial_partner(const std::vector<int>& path) const {
    for (auto& r : relations) {
        if (r.size() != 2) continue;
        if (r[0] == path) return r[1];
        if (r[1] == path) return r[0];
    }
    return std::nullopt;
}

BasicAlgebraData BasicAlgebraData::load(const std::string& preset) {
    BasicAlgebraData d;
    std::istringstream in(preset_text(preset));
    std::string line;
    std::vector<std::pair<std::string, std::string>> idem;
    auto trim = [](std::string s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto split_list = [&](const std::string& s) {
        std::vector<std::string> out;
        std::istringstream ls(s);
        std::string item;
        while (std::getline(ls, item, ',')) out.push_back(trim(item));
        return out;
    };
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        line = trim(line);
        if (line.empty()) continue;
        auto sp = line.find(' ');
        std::string kw = line.substr(0, sp), rest = sp == std::string::npos ? "" : trim(line.substr(sp));
        auto eq = rest.find('=');
        if (kw == "ambient")
            d.ambient = Algebra::build(rest);
        else if (kw == "idempotent")
            idem.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
        else if (kw == "basis")
            d.basis_text.push_back(rest);
        else if (kw == "radical")
            d.radical_text = split_list(rest);
        else if (kw == "radical2")
            d.radical2_text = split_list(rest);
        else if (kw == "arrow")
            d.arrows[trim(rest.substr(0, eq))] = trim(rest.substr(eq + 1));
        else if (kw == "psi")
            d.psi.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
        else if (kw != "name" && kw != "title")
            throw InputError("basic preset: unknown keyword " + kw);
    }
    if (!d.ambient) throw InputError("basic preset without ambient algebra");
    // idempotent names may appear inside later expressions: substitute textually
    auto subst = [&](std::string s) {
        for (auto& [n, v] : idem) {
            std::size_t p = 0;
            while ((p = s.find(n, p)) != std::string::npos) {
                bool left = p == 0 || !std::isalnum(static_cast<unsigned char>(s[p - 1]));
                bool right = p + n.size() >= s.size() || !std::isalnum(static_cast<unsigned char>(s[p + n.size()]));
                if (left && right) {
                    s.replace(p, n.size(), "(" + v + ")");
                    p += v.size() + 2;
                } else {
                    p += n.size();
                }
            }
        }
        return s;
    };
    for (auto& [n, v] : idem) {
        if (n == "e0") d.e0 = d.ambient->parse(v);
        if (n == "e1") d.e1 = d.ambient->parse(v);
    }
    d.e = d.e0 + d.e1;
    for (auto& b : d.basis_text) d.basis.push_back(d.ambient->parse(subst(b)));
    // keep substitution available for callers through element texts
    for (auto& [k, v] : d.arrows) v = subst(v);
    for (auto& [k, v] : d.psi) {
        k = subst(k);
        v = subst(v);
    }
    for (auto& r : d.radical_text) r = subst(r);
    for (auto& r : d.radical2_text) r = subst(r);
    return d;
}

std::optional<Matrix> BasicAlgebraData::coords(const Element& x) const {
    std::size_t n = basis.size(), N = ambient->dim();
    Matrix B(ambient->field(), n, N);
    for (std::size_t i = 0; i < n; ++i) B.add_row_from(i, ambient->coords(basis[i]), 0);
    auto rr = row_reduce(Matrix::hstack(B, Matrix::identity(ambient->field(), n)));
    Matrix v = ambient->coords(x);
    Matrix comb(ambient->field(), 1, n);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::size_t p = rr.pivots[i];
        if (p >= N) break;
        fe c = v.at(0, p);
        if (!c) continue;
        Matrix row = rr.rref.row(i);
        v.add_row_from(0, row.block(0, 0, 1, N), 0, c);
        comb.add_row_from(0, row.block(0, N, 1, n), 0, c);
    }
    if (!v.row_is_zero(0)) return std::nullopt;
    return comb;
}

std::shared_ptr<const FDAlgebra> BasicAlgebraData::algebra() const {
    auto self = std::make_shared<BasicAlgebraData>(*this);
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Matrix r(ambient->field(), 1, basis.size());
        r.set(0, i, 1);
        gens.push_back(r);
    }
    auto unit = coords(e);
    if (!unit) throw std::logic_error("e is not in the span of the basic basis");
    auto prod = [self](std::size_t i, std::size_t j) {
        auto c = self->coords(self->ambient->mul(self->basis[i], self->basis[j]));
        if (!c) throw std::logic_error("basic basis is not closed under multiplication");
        return *c;
    };
    auto ev = [](const Module& m, std::size_t i) { return m.gens[i]; };
    return std::make_shared<FDAlgebra>("basic", ambient->field(), basis_text, *unit, basis_text, gens, prod, ev);
}

}  // namespace rjd
