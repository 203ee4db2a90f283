#include "rjd/reptheory.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "rjd/presentation.hpp"

namespace rjd {

namespace {

constexpr int kMeataxeBudget = 200;

Matrix embed(const Matrix& m, const Field& f) {
    if (m.field() == f) return m;
    Matrix r(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (fe v = m.at(i, j)) {
                if (v > 1) throw InputError("cannot embed a non-prime-field entry");
                r.set(i, j, v);
            }
    return r;
}

fe random_fe(const Field& f, std::mt19937& rng) { return static_cast<fe>(rng() % f.size()); }

Matrix random_row(const Field& f, std::size_t n, std::mt19937& rng) {
    Matrix v(f, 1, n);
    for (std::size_t i = 0; i < n; ++i) v.set(0, i, random_fe(f, rng));
    return v;
}

// nonzero combination of the columns of k, as a row
Matrix random_kernel_vector(const Matrix& k, std::mt19937& rng) {
    const Field& f = k.field();
    for (;;) {
        Matrix c = random_row(f, k.cols(), rng);
        if (c.row_is_zero(0)) continue;
        return (k * c.transposed()).transposed();
    }
}

Matrix random_algebra_element(const Module& m, std::mt19937& rng) {
    const Field& f = m.field;
    Matrix t = Matrix::identity(f, m.dim).scaled(random_fe(f, rng));
    if (m.gens.empty()) return t;
    for (int k = 0; k < 4; ++k) {
        std::size_t len = 1 + rng() % 3;
        Matrix p = m.gens[rng() % m.gens.size()];
        for (std::size_t i = 1; i < len; ++i) p = p * m.gens[rng() % m.gens.size()];
        fe c = random_fe(f, rng);
        if (c) t += p.scaled(c);
    }
    return t;
}

Module transposed_module(const Module& m) {
    Module t = m;
    for (auto& g : t.gens) g = g.transposed();
    return t;
}

// vectors v with u.v = 0 for every row u of s
Subspace annihilator(const Subspace& s) {
    if (s.dim() == 0) return Subspace::span(Matrix::identity(s.field(), s.ambient()));
    return Subspace::span(row_reduce(s.rows()).kernel.transposed());
}

struct Split {
    bool simple = false;
    Subspace sub;
};

Split meataxe(const Module& m, std::mt19937& rng) {
    std::size_t n = m.dim;
    if (n <= 1) return {true, {}};
    Module mt = transposed_module(m);
    for (int attempt = 0; attempt < kMeataxeBudget; ++attempt) {
        Matrix theta = random_algebra_element(m, rng);
        Matrix k = row_reduce(theta).kernel;
        if (k.cols() == 0) continue;
        Subspace w = spin(m, random_kernel_vector(k, rng));
        if (w.dim() < n) return {false, w};
        Matrix kt = row_reduce(theta.transposed()).kernel;
        Subspace u = spin(mt, random_kernel_vector(kt, rng));
        if (u.dim() < n) return {false, annihilator(u)};
        if (k.cols() == 1) return {true, {}};
    }
    throw ResourceError("no Meataxe split of a dimension " + std::to_string(n) +
                        " module within the retry budget; try a larger field (--field-ext)");
}

std::string describe_shape(const Module& m) {
    std::ostringstream os;
    os << m.label << " (dim " << m.dim << ")";
    return os.str();
}

}  // namespace

std::vector<std::string> check_representation(const Algebra& a, const Module& m) {
    std::set<std::string> want;
    for (int l : a.generator_letters()) want.insert(a.alphabet()[l].name);
    std::set<std::string> have(m.names.begin(), m.names.end());
    if (want != have || m.names.size() != m.gens.size())
        throw InputError("module " + describe_shape(m) + " does not list the generators of " + a.name());
    for (auto& g : m.gens)
        if (g.rows() != m.dim || g.cols() != m.dim)
            throw InputError("module " + describe_shape(m) + " has a generator matrix of the wrong shape");
    std::vector<std::string> bad;
    for (const auto& [label, rel] : a.relations()) {
        try {
            if (!evaluate(a, m, rel).is_zero()) bad.push_back(label);
        } catch (const std::logic_error&) {
            bad.push_back(label + " (invertible generator acts singularly)");
        }
    }
    return bad;
}

std::vector<std::string> check_representation(const FDAlgebra& a, const Module& m) {
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix x = a.eval_basis(m, i);
        if (x.rows() != m.dim || x.cols() != m.dim)
            throw InputError("module " + describe_shape(m) + " has a generator matrix of the wrong shape");
        act.push_back(std::move(x));
    }
    auto eval_row = [&](const Matrix& row) {
        Matrix r(m.field, m.dim, m.dim);
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (fe c = row.at(0, i)) r += act[i].scaled(c);
        return r;
    };
    std::vector<std::string> bad;
    if (!eval_row(a.unit()).is_identity()) bad.push_back("unit");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (act[i] * act[j] != eval_row(a.product(i, j)))
                bad.push_back("(" + a.label(i) + ")(" + a.label(j) + ")");
    return bad;
}

Module extend_field(const Module& m, const Field& f) {
    Module r = m;
    r.field = f;
    for (auto& g : r.gens) g = embed(g, f);
    return r;
}

Module direct_sum(const Module& x, const Module& y) {
    if (x.names != y.names) throw InputError("direct sum of modules over different generators");
    Module r{x.field, x.dim + y.dim, x.names, {}, x.label + "+" + y.label};
    for (std::size_t i = 0; i < x.gens.size(); ++i) {
        Matrix z(x.field, r.dim, r.dim);
        for (std::size_t a = 0; a < x.dim; ++a)
            for (std::size_t b = 0; b < x.dim; ++b) z.set(a, b, x.gens[i].at(a, b));
        for (std::size_t a = 0; a < y.dim; ++a)
            for (std::size_t b = 0; b < y.dim; ++b) z.set(x.dim + a, x.dim + b, y.gens[i].at(a, b));
        r.gens.push_back(std::move(z));
    }
    return r;
}

Module submodule(const Module& m, const Subspace& s) {
    Module r{m.field, s.dim(), m.names, {}, m.label + " sub"};
    const Matrix& b = s.rows();
    for (auto& g : m.gens) {
        Matrix img = b * g.transposed();
        Matrix a(m.field, s.dim(), s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) {
            auto c = s.coords(img, i);
            for (std::size_t j = 0; j < c.size(); ++j) a.set(j, i, c[j]);
        }
        r.gens.push_back(std::move(a));
    }
    return r;
}

Module quotient(const Module& m, const Subspace& s) {
    auto comp = s.complement();
    Module r{m.field, comp.size(), m.names, {}, m.label + " quot"};
    for (auto& g : m.gens) {
        Matrix gt = g.transposed();
        Matrix a(m.field, comp.size(), comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            Matrix v = gt.row(comp[i]);
            s.reduce(v);
            for (std::size_t j = 0; j < comp.size(); ++j) a.set(j, i, v.at(0, comp[j]));
        }
        r.gens.push_back(std::move(a));
    }
    return r;
}

Module subquotient(const Module& m, const Subspace& outer, const Subspace& inner) {
    Module sub = submodule(m, outer);
    Subspace in(m.field, outer.dim());
    for (std::size_t r = 0; r < inner.dim(); ++r) {
        auto c = outer.coords(inner.rows(), r);
        Matrix v(m.field, 1, outer.dim());
        for (std::size_t j = 0; j < c.size(); ++j) v.set(0, j, c[j]);
        in.insert(v);
    }
    Module q = quotient(sub, in);
    q.label = m.label + " layer";
    return q;
}

Subspace spin(const Module& m, const Matrix& v) {
    Subspace w(m.field, m.dim);
    std::vector<Matrix> todo;
    for (std::size_t r = 0; r < v.rows(); ++r)
        if (w.insert(v, r)) todo.push_back(v.row(r));
    std::vector<Matrix> gt;
    for (auto& g : m.gens) gt.push_back(g.transposed());
    for (std::size_t i = 0; i < todo.size() && w.dim() < m.dim; ++i)
        for (auto& t : gt) {
            Matrix u = todo[i] * t;
            if (w.insert(u)) todo.push_back(std::move(u));
        }
    return w;
}

bool is_invariant(const Module& m, const Subspace& s) {
    for (auto& g : m.gens) {
        Matrix img = s.rows() * g.transposed();
        for (std::size_t r = 0; r < img.rows(); ++r)
            if (!s.contains(img, r)) return false;
    }
    return true;
}

std::vector<Matrix> hom_space(const Module& x, const Module& y) {
    if (x.names != y.names) throw InputError("Hom between modules over different generators");
    std::size_t d1 = x.dim, d2 = y.dim, nv = d1 * d2;
    if (nv == 0) return {};
    const Field& f = x.field;
    Matrix eq(f, x.gens.size() * nv, nv);
    std::size_t row = 0;
    for (std::size_t g = 0; g < x.gens.size(); ++g) {
        const Matrix& r1 = x.gens[g];
        const Matrix& r2 = y.gens[g];
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j, ++row) {
                for (std::size_t q = 0; q < d1; ++q)
                    if (fe c = r1.at(q, j)) eq.set(row, i * d1 + q, eq.at(row, i * d1 + q) ^ c);
                for (std::size_t p = 0; p < d2; ++p)
                    if (fe c = r2.at(i, p)) eq.set(row, p * d1 + j, eq.at(row, p * d1 + j) ^ c);
            }
    }
    Matrix k = row_reduce(eq).kernel;
    std::vector<Matrix> out;
    for (std::size_t c = 0; c < k.cols(); ++c) {
        Matrix t(f, d2, d1);
        for (std::size_t i = 0; i < d2; ++i)
            for (std::size_t j = 0; j < d1; ++j) t.set(i, j, k.at(i * d1 + j, c));
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

std::vector<std::size_t> rank_profile(const Module& m) {
    std::vector<std::size_t> p;
    for (auto& g : m.gens) {
        p.push_back(rank(g));
        p.push_back(rank(g * g));
    }
    return p;
}

// visits every combination of the basis; stops when fn returns true
template <class Fn>
bool enumerate_span(const std::vector<Matrix>& basis, const Field& f, Fn fn) {
    Matrix cur(f, basis[0].rows(), basis[0].cols());
    std::vector<fe> digits(basis.size(), 0);
    for (;;) {
        if (fn(cur, digits)) return true;
        std::size_t i = 0;
        for (; i < basis.size(); ++i) {
            fe old = digits[i];
            fe nw = static_cast<fe>((old + 1) % f.size());
            cur += basis[i].scaled(old ^ nw);
            digits[i] = nw;
            if (nw) break;
        }
        if (i == basis.size()) return false;
    }
}

double log2_size(const Field& f, std::size_t e) { return static_cast<double>(f.k()) * static_cast<double>(e); }

// End = F.1 + N with N a nilpotent two-sided ideal; in characteristic 2,
// x - l is nilpotent iff x^Q = l^Q for Q = 2^s >= n
bool split_local(const std::vector<Matrix>& end, std::size_t n) {
    if (end.empty()) return false;
    const Field& f = end[0].field();
    unsigned q = 1, s = 0;
    while (q < n) q <<= 1, ++s;
    Matrix id = Matrix::identity(f, n);
    std::vector<Matrix> nil;
    for (auto& x : end) {
        Matrix y = x.power(q);
        fe mu = y.at(0, 0);
        if (y != id.scaled(mu)) return false;
        fe l = mu;
        for (unsigned i = 0; i < s; ++i) l = f.pow(l, f.size() / 2);
        nil.push_back(x + id.scaled(l));
    }
    auto flat = [&](const Matrix& m) {
        Matrix v(f, 1, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v.set(0, i * n + j, m.at(i, j));
        return v;
    };
    Subspace ideal(f, n * n);
    std::vector<Matrix> basis;
    for (auto& x : nil)
        if (ideal.insert(flat(x))) basis.push_back(x);
    if (basis.size() + 1 != end.size()) return false;
    for (auto& x : end)
        for (auto& b : basis)
            if (!ideal.contains(flat(x * b)) || !ideal.contains(flat(b * x))) return false;
    // N^k spans shrink to zero
    std::vector<Matrix> layer = basis;
    for (std::size_t k = 0; k <= n && !layer.empty(); ++k) {
        Subspace next(f, n * n);
        std::vector<Matrix> nb;
        for (auto& x : layer)
            for (auto& b : basis) {
                Matrix p = x * b;
                if (next.insert(flat(p))) nb.push_back(p);
            }
        layer = std::move(nb);
    }
    return layer.empty();
}

}  // namespace

IsoResult isomorphism(const Module& x, const Module& y, unsigned seed) {
    IsoResult r;
    if (x.dim != y.dim) {
        r.note = "dimensions differ";
        return r;
    }
    if (x.dim == 0) {
        r.iso = true;
        return r;
    }
    if (rank_profile(x) != rank_profile(y)) {
        r.note = "rank profiles differ";
        return r;
    }
    auto h = hom_space(x, y);
    if (h.empty()) {
        r.note = "Hom is zero";
        return r;
    }
    std::size_t n = x.dim;
    if (log2_size(x.field, h.size()) <= 16) {
        enumerate_span(h, x.field, [&](const Matrix& t, const std::vector<fe>&) {
            if (rank(t) == n) {
                r.iso = true;
                r.witness = t;
                return true;
            }
            return false;
        });
        if (!r.iso) r.note = "no invertible intertwiner (exhaustive)";
        return r;
    }
    // with End(x) local, x = y iff some g f is a unit for basis maps f: x -> y, g: y -> x
    if (split_local(hom_space(x, x), n)) {
        auto back = hom_space(y, x);
        for (auto& f : h)
            for (auto& g : back)
                if (rank(g * f) == n) {
                    r.iso = true;
                    r.witness = f;
                    return r;
                }
        r.note = "no unit in Hom(y,x) Hom(x,y) (x has local End)";
        return r;
    }
    std::mt19937 rng(seed);
    for (int s = 0; s < 200; ++s) {
        Matrix t(x.field, y.dim, x.dim);
        for (auto& b : h) t += b.scaled(random_fe(x.field, rng));
        if (rank(t) == n) {
            r.iso = true;
            r.witness = t;
            return r;
        }
    }
    r.certain = false;
    r.note = "probably-non-isomorphic (200 random intertwiners singular)";
    return r;
}

IndecResult indecomposability(const Module& m) {
    IndecResult r;
    if (m.dim == 0) {
        r.note = "zero module";
        return r;
    }
    auto end = hom_space(m, m);
    r.end_dim = end.size();
    std::size_t n = m.dim;
    const Field& f = m.field;
    if (log2_size(f, end.size()) <= 20) {
        // End is local iff its non-units form a subspace
        Subspace span(f, end.size());
        std::size_t nonunits = 0;
        enumerate_span(end, f, [&](const Matrix& t, const std::vector<fe>& d) {
            if (rank(t) < n) {
                ++nonunits;
                Matrix v(f, 1, d.size());
                for (std::size_t i = 0; i < d.size(); ++i) v.set(0, i, d[i]);
                span.insert(v);
            }
            return false;
        });
        double expect = log2_size(f, span.dim());
        r.indecomposable = expect < 63 && nonunits == (std::size_t{1} << static_cast<int>(expect));
        r.note = r.indecomposable ? "End local (exhaustive)" : "non-units of End not closed under addition";
        return r;
    }
    if (split_local(end, n)) {
        r.indecomposable = true;
        r.note = "End = k + nilpotent ideal";
        return r;
    }
    auto fitting = [&](const Matrix& e) {
        std::size_t rk = rank(e.power(static_cast<unsigned>(n)));
        return rk > 0 && rk < n;
    };
    for (std::size_t i = 0; i < end.size(); ++i) {
        for (std::size_t j = i; j < end.size(); ++j) {
            Matrix e = i == j ? end[i] : end[i] + end[j];
            if (fitting(e)) {
                r.note = "Fitting decomposition found";
                return r;
            }
        }
    }
    r.indecomposable = true;
    r.certain = false;
    r.note = "no splitting found (heuristic)";
    return r;
}

std::vector<Module> composition_factors(const Module& m, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Module> out, stack{m};
    while (!stack.empty()) {
        Module cur = std::move(stack.back());
        stack.pop_back();
        if (cur.dim == 0) continue;
        Split s = meataxe(cur, rng);
        if (s.simple) {
            out.push_back(std::move(cur));
            continue;
        }
        stack.push_back(quotient(cur, s.sub));
        stack.push_back(submodule(cur, s.sub));
    }
    return out;
}

bool is_simple(const Module& m, unsigned seed) {
    if (m.dim == 0) return false;
    std::mt19937 rng(seed);
    return meataxe(m, rng).simple;
}

std::vector<std::size_t> jordan_type(const Matrix& n) {
    if (n.rows() != n.cols()) throw InputError("jordan_type needs a square matrix");
    std::size_t d = n.rows();
    std::vector<std::size_t> ranks{d};
    Matrix p = Matrix::identity(n.field(), d);
    while (ranks.back() > 0) {
        if (ranks.size() > d + 1) throw InputError("jordan_type: matrix is not nilpotent");
        p = p * n;
        std::size_t r = rank(p);
        if (r == ranks.back()) throw InputError("jordan_type: matrix is not nilpotent");
        ranks.push_back(r);
    }
    // blocks of size >= k: ranks[k-1] - ranks[k]
    std::vector<std::size_t> parts;
    for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
        std::size_t atleast = ranks[k - 1] - ranks[k];
        std::size_t bigger = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < atleast - bigger; ++c) parts.push_back(k);
    }
    return parts;
}

RepContext::RepContext(FDAlgebraPtr a, unsigned seed, std::optional<Field> f)
    : a_(std::move(a)), seed_(seed), f_(f ? *f : a_->field()) {
    for (auto& s : composition_factors(regular(), seed)) {
        if (identify(s) >= 0) continue;
        simples_.push_back(std::move(s));
    }
    std::stable_sort(simples_.begin(), simples_.end(), [](auto& x, auto& y) { return x.dim < y.dim; });
    for (std::size_t i = 0; i < simples_.size(); ++i) simples_[i].label = "S" + std::to_string(i);
}

Module RepContext::regular() const { return extend_field(a_->regular(), f_); }

int RepContext::identify(const Module& s) const {
    for (std::size_t i = 0; i < simples_.size(); ++i)
        if (simples_[i].dim == s.dim && !hom_space(s, simples_[i]).empty()) return static_cast<int>(i);
    return -1;
}

const Subspace& RepContext::jacobson() const {
    if (jac_) return *jac_;
    std::size_t n = a_->dim(), cols = 0;
    for (auto& s : simples_) cols += s.dim * s.dim;
    Matrix r(f_, n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (auto& s : simples_) {
            Matrix x = a_->eval_basis(s, i);
            for (std::size_t p = 0; p < s.dim; ++p)
                for (std::size_t q = 0; q < s.dim; ++q, ++c) r.set(i, c, x.at(p, q));
        }
    }
    Subspace j = Subspace::span(row_reduce(r.transposed()).kernel.transposed());
    if (j.dim() == 0) j = Subspace(f_, n);
    // nilpotency: J^(k+1) = J^k J
    Subspace pw = j;
    nil_ = 1;
    auto alg_mul = [&](const Matrix& x, std::size_t rx, const Matrix& y, std::size_t ry) {
        return embed(a_->mul(x, y, rx, ry), f_);
    };
    while (pw.dim() > 0) {
        if (nil_ > static_cast<int>(n)) throw std::logic_error("Jacobson radical is not nilpotent");
        Subspace next(f_, n);
        for (std::size_t p = 0; p < pw.dim(); ++p)
            for (std::size_t q = 0; q < j.dim(); ++q) next.insert(alg_mul(pw.rows(), p, j.rows(), q));
        pw = std::move(next);
        ++nil_;
    }
    jac_ = std::move(j);
    return *jac_;
}

int RepContext::nilpotency_index() const {
    jacobson();
    return nil_;
}

bool RepContext::wedderburn_complete() const {
    std::size_t sq = 0;
    for (auto& s : simples_) sq += s.dim * s.dim;
    return a_->dim() - jacobson().dim() == sq;
}

std::vector<Matrix> RepContext::basis_actions(const Module& m) const {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < a_->dim(); ++i) out.push_back(a_->eval_basis(m, i));
    return out;
}

std::vector<Matrix> RepContext::jac_actions(const Module& m) const {
    auto b = basis_actions(m);
    const Subspace& j = jacobson();
    std::vector<Matrix> out;
    for (std::size_t r = 0; r < j.dim(); ++r) {
        Matrix x(m.field, m.dim, m.dim);
        for (std::size_t i = 0; i < b.size(); ++i)
            if (fe c = j.rows().at(r, i)) x += b[i].scaled(c);
        out.push_back(std::move(x));
    }
    return out;
}

Subspace RepContext::radical(const Module& m) const {
    Subspace s(m.field, m.dim);
    for (auto& x : jac_actions(m)) s.insert_rows(x.transposed());
    return s;
}

Subspace RepContext::socle(const Module& m) const {
    Matrix st(m.field, 0, m.dim);
    for (auto& x : jac_actions(m)) st = Matrix::vstack(st, x);
    if (st.rows() == 0) return Subspace::span(Matrix::identity(m.field, m.dim));
    return Subspace::span(row_reduce(st).kernel.transposed());
}

ModuleSeries RepContext::series(const Module& m) const {
    ModuleSeries s;
    auto acts = jac_actions(m);
    std::vector<Matrix> acts_t;
    for (auto& x : acts) acts_t.push_back(x.transposed());
    Subspace cur = Subspace::span(Matrix::identity(m.field, m.dim));
    s.radical.push_back(cur);
    while (cur.dim() > 0) {
        Subspace next(m.field, m.dim);
        for (auto& t : acts_t) next.insert_rows(cur.rows() * t);
        if (next.dim() == cur.dim()) throw std::logic_error("radical series does not descend");
        s.radical.push_back(next);
        cur = std::move(next);
    }
    cur = Subspace(m.field, m.dim);
    s.socle.push_back(cur);
    while (cur.dim() < m.dim) {
        Matrix c = annihilator(cur).rows();
        Matrix st(m.field, 0, m.dim);
        for (auto& x : acts) st = Matrix::vstack(st, c * x);
        Subspace next = st.rows() ? Subspace::span(row_reduce(st).kernel.transposed())
                                  : Subspace::span(Matrix::identity(m.field, m.dim));
        if (next.dim() == cur.dim()) throw std::logic_error("socle series does not ascend");
        s.socle.push_back(next);
        cur = std::move(next);
    }
    for (std::size_t i = 0; i + 1 < s.socle.size(); ++i) {
        std::vector<int> layer;
        for (auto& f : composition_factors(subquotient(m, s.socle[i + 1], s.socle[i]), seed_))
            layer.push_back(identify(f));
        std::sort(layer.begin(), layer.end());
        s.factors.insert(s.factors.end(), layer.begin(), layer.end());
    }
    return s;
}

bool RepContext::is_uniserial(const Module& m) const {
    auto s = series(m);
    for (std::size_t i = 0; i + 1 < s.radical.size(); ++i)
        if (!is_simple(subquotient(m, s.radical[i], s.radical[i + 1]), seed_)) return false;
    return true;
}

Module RepContext::projective(const Matrix& e) const {
    if (a_->mul(e, e) != e) throw InputError("projective_from_idempotent: element is not idempotent");
    Subspace w(f_, a_->dim());
    for (std::size_t i = 0; i < a_->dim(); ++i) w.insert(embed(a_->mul(a_->basis_row(i), e), f_));
    Module p = submodule(regular(), w);
    p.label = a_->name() + " e";
    return p;
}

std::size_t RepContext::ext1(const Module& p, const Module& t) const {
    auto s = series(p);
    if (s.radical.size() < 2) return 0;
    Subspace r2 = s.radical.size() > 2 ? s.radical[2] : Subspace(p.field, p.dim);
    return hom_space(subquotient(p, s.radical[1], r2), t).size();
}

std::vector<int> RepContext::top(const Module& m) const {
    std::vector<int> out;
    for (auto& f : composition_factors(quotient(m, radical(m)), seed_)) out.push_back(identify(f));
    std::sort(out.begin(), out.end());
    return out;
}

BiserialWitness biserial_witness(const RepContext& ctx, const Module& m) {
    BiserialWitness w;
    Subspace rad = ctx.radical(m);
    Module rm = submodule(m, rad);
    std::size_t r = rad.dim();
    if (r == 0) return w;
    const Field& f = m.field;
    std::vector<Subspace> cands;
    auto consider = [&](const Matrix& v) {
        if (v.row_is_zero(0)) return;
        Subspace u = spin(rm, v);
        if (u.dim() == r) return;
        for (auto& c : cands)
            if (c == u) return;
        if (ctx.is_uniserial(submodule(rm, u))) cands.push_back(std::move(u));
    };
    if (log2_size(f, r) <= 16) {
        std::vector<Matrix> unit;
        for (std::size_t i = 0; i < r; ++i) {
            Matrix e(f, 1, r);
            e.set(0, i, 1);
            unit.push_back(e);
        }
        enumerate_span(unit, f, [&](const Matrix& v, const std::vector<fe>&) {
            consider(v);
            return false;
        });
    } else {
        std::mt19937 rng(ctx.seed());
        for (int s = 0; s < 4096; ++s) consider(random_row(f, r, rng));
    }
    std::stable_sort(cands.begin(), cands.end(), [](auto& a, auto& b) { return a.dim() > b.dim(); });
    auto lift = [&](const Subspace& s) { return Subspace::span(s.rows() * rad.rows()); };
    for (std::size_t i = 0; i < cands.size(); ++i)
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
            if (cands[i].sum(cands[j]).dim() != r) continue;
            Subspace meet = cands[i].intersect(cands[j]);
            if (meet.dim() == 0) continue;
            Module mm = submodule(rm, meet);
            if (!is_simple(mm, ctx.seed())) continue;
            w.found = true;
            w.u = lift(cands[i]);
            w.v = lift(cands[j]);
            w.meet = ctx.identify(mm);
            return w;
        }
    return w;
}

Module dual_module(const Hopf& h, const Module& m, bool use_inverse) {
    const Algebra& a = h.algebra();
    std::vector<std::string> names = m.names;
    auto power = [&](const Element& x, int k) {
        Element y = x;
        for (int i = 0; i < k; ++i) y = h.antipode(y);
        return y;
    };
    int order = 1;
    if (use_inverse) {
        for (order = 1; order <= 16; ++order) {
            bool id = true;
            for (auto& n : names)
                if (power(a.letter(n), order) != a.letter(n)) id = false;
            if (id) break;
        }
        if (order > 16) throw ResourceError("antipode order exceeds 16 on the generators");
    }
    Module d{m.field, m.dim, names, {}, m.label + "*"};
    for (auto& n : names) {
        Element s = use_inverse ? power(a.letter(n), order - 1) : h.antipode(a.letter(n));
        d.gens.push_back(evaluate(a, m, s).transposed());
    }
    return d;
}

Module twist(const Algebra& a, const Module& m, const std::map<std::string, Element>& theta) {
    Module t{m.field, m.dim, m.names, {}, m.label + "^theta"};
    for (auto& n : m.names) {
        auto it = theta.find(n);
        if (it == theta.end()) throw InputError("twist: no image for generator " + n);
        t.gens.push_back(evaluate(a, m, it->second));
    }
    return t;
}

SmallSearch search_small_modules(const Algebra& a, std::size_t dim) {
    std::vector<std::string> names;
    for (int l : a.generator_letters()) names.push_back(a.alphabet()[l].name);
    std::size_t bits = names.size() * dim * dim;
    if (bits > 20) throw ResourceError("small module search over 2^" + std::to_string(bits) + " assignments");
    SmallSearch s;
    Field f;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        Module m{f, dim, names, {}, "candidate"};
        std::size_t b = 0;
        for (std::size_t g = 0; g < names.size(); ++g) {
            Matrix x(f, dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j, ++b)
                    if ((code >> b) & 1) x.set(i, j, 1);
            m.gens.push_back(std::move(x));
        }
        ++s.candidates;
        if (!check_representation(a, m).empty()) continue;
        ++s.valid;
        if (code != 0) ++s.nonzero;
    }
    return s;
}

}  // namespace rjd
