#include "rjd/zoo.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rjd/parallel.hpp"
#include "rjd/presentation.hpp"
#include "rjd/sequences.hpp"

namespace rjd {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> v{
        {Family::V0, "V0"},       {Family::V1, "V1"},       {Family::Vext, "Vext"},   {Family::M, "M"},
        {Family::N, "N"},         {Family::U1, "U1"},       {Family::U2, "U2"},       {Family::U3, "U3"},
        {Family::U4, "U4"},       {Family::Vfam1, "Vfam1"}, {Family::Vfam2, "Vfam2"}, {Family::Wfam1, "Wfam1"},
        {Family::Wfam2, "Wfam2"}, {Family::Aband, "Aband"}, {Family::Bband, "Bband"}};
    return v;
}

const Algebra& um() { return Hopf::of("um")->algebra(); }

Module blank(const Field& f, std::size_t d) {
    Module m{f, d, {"a", "b", "c"}, {}, ""};
    for (int i = 0; i < 3; ++i) m.gens.emplace_back(f, d, d);
    return m;
}

// column j of a generator is the image of basis vector j
void image(Module& m, int g, std::size_t from, std::size_t to, fe c = 1) {
    Matrix& x = m.gens[static_cast<std::size_t>(g)];
    x.set(to, from, m.field.add(x.at(to, from), c));
}

Module from_rows(const Field& f, const std::vector<std::vector<std::vector<fe>>>& rows) {
    Module m{f, rows[0].size(), {"a", "b", "c"}, {}, ""};
    for (auto& r : rows) m.gens.push_back(Matrix::from_rows(f, r));
    return m;
}

Module table_module(const StringBandSpec& s, const Field& f) {
    int d = static_cast<int>(s.dim());
    Module m = blank(f, s.dim());
    auto z = [](int i) { return static_cast<std::size_t>(i - 1); };
    for (int i = 1; i <= d; ++i) {
        if (table::kappa(s.family, i, d)) image(m, 0, z(i), z(i + 1));
        if (table::mu(s.family, i, d)) image(m, 1, z(i), z(i - 1));
        if (table::xi(s.family, i, d)) image(m, 1, z(i), z(i + 3), s.lambda);
        if (table::nu(s.family, i)) image(m, 2, z(i), z(i));
    }
    return m;
}

// basis v1..v4 = 0..3, w1..w4 = 4..7
Module module_m(const Field& f) {
    Module m = blank(f, 8);
    for (std::size_t i = 0; i < 3; ++i) {
        image(m, 0, i, i + 1);
        image(m, 0, 4 + i, 5 + i);
    }
    image(m, 1, 1, 0);
    image(m, 1, 2, 1);
    image(m, 1, 4, 2);
    image(m, 1, 5, 3);
    image(m, 1, 6, 5);
    image(m, 1, 7, 6);
    for (std::size_t i : {0, 2, 5, 7}) image(m, 2, i, i);
    return m;
}

Module module_n(const Field& f) {
    Module m = blank(f, 8);
    for (std::size_t i = 0; i < 3; ++i) {
        image(m, 0, i, i + 1);
        image(m, 0, 4 + i, 5 + i);
    }
    image(m, 1, 2, 1);
    image(m, 1, 3, 2);
    image(m, 1, 4, 0);
    image(m, 1, 7, 3);
    image(m, 1, 5, 1);
    image(m, 1, 5, 4);
    image(m, 1, 6, 2);
    image(m, 1, 6, 5);
    for (std::size_t i : {1, 3, 4, 6}) image(m, 2, i, i);
    return m;
}

Matrix vectors(const Field& f, std::size_t d, const std::vector<std::vector<std::size_t>>& supports) {
    Matrix v(f, supports.size(), d);
    for (std::size_t r = 0; r < supports.size(); ++r)
        for (std::size_t c : supports[r]) v.set(r, c, 1);
    return v;
}

}  // namespace

std::string family_name(Family f) {
    for (auto& [k, n] : family_names())
        if (k == f) return n;
    return "?";
}

std::optional<Family> parse_family(const std::string& s) {
    for (auto& [k, n] : family_names())
        if (n == s) return k;
    return std::nullopt;
}

bool is_string_family(Family f) { return f >= Family::U1 && f <= Family::Wfam2; }
bool is_band_family(Family f) { return f == Family::Aband || f == Family::Bband; }

std::size_t StringBandSpec::dim() const {
    switch (family) {
    case Family::V0: return 1;
    case Family::V1: return 3;
    case Family::Vext: return 4;
    case Family::M:
    case Family::N: return 8;
    case Family::U1:
    case Family::U4: return static_cast<std::size_t>(4 * r + 1);
    case Family::U2:
    case Family::U3: return static_cast<std::size_t>(4 * r + 3);
    case Family::Aband:
    case Family::Bband: return static_cast<std::size_t>(4 * n);
    default: return static_cast<std::size_t>(4 * (t + 1));
    }
}

std::string StringBandSpec::label(const Field& f) const {
    std::string s = family_name(family);
    if (family >= Family::U1 && family <= Family::U4) return s + "(r=" + std::to_string(r) + ")";
    if (is_string_family(family)) return s + "(t=" + std::to_string(t) + ")";
    if (is_band_family(family)) return s + "(lambda=" + f.str(lambda) + ",n=" + std::to_string(n) + ")";
    if (family == Family::Vext) return s + "(" + f.str(theta) + "," + f.str(lambda) + "," + f.str(mu) + ")";
    return s;
}

namespace table {

bool kappa(Family f, int i, int d) {
    if (i >= d) return false;
    switch (f) {
    case Family::U1:
    case Family::Vfam1:
    case Family::Wfam1:
    case Family::U3:
    case Family::Aband:
    case Family::Bband: return i % 4 != 0;
    case Family::U2:
    case Family::Vfam2: return i % 4 != 3;
    case Family::U4:
    case Family::Wfam2: return i % 4 != 1;
    default: return false;
    }
}

bool mu(Family f, int i, int d) {
    if (i <= 1 || i > d) return false;
    switch (f) {
    case Family::U1:
    case Family::Vfam1:
    case Family::Aband: return i % 4 != 2;
    case Family::U2:
    case Family::U4:
    case Family::Vfam2:
    case Family::Wfam2: return i % 4 != 1;
    case Family::U3:
    case Family::Wfam1:
    case Family::Bband: return i % 4 != 0;
    default: return false;
    }
}

bool xi(Family f, int i, int d) { return is_band_family(f) && i % 4 == 1 && i + 3 <= d; }

int nu(Family f, int i) {
    switch (f) {
    case Family::U1:
    case Family::U4:
    case Family::Vfam1:
    case Family::Wfam2:
    case Family::Aband: return (i + 1) % 2;
    default: return i % 2;
    }
}

}  // namespace table

Module make_module(const StringBandSpec& s, const Field& f) {
    if (s.family >= Family::U1 && s.family <= Family::U4 && s.r < 1) throw InputError("r must be >= 1");
    if (s.family >= Family::Vfam1 && s.family <= Family::Wfam2 && s.t < 0) throw InputError("t must be >= 0");
    if (is_band_family(s.family)) {
        if (s.n < 1) throw InputError("n must be >= 1");
        if (s.lambda == 0) throw InputError("band parameter lambda must be nonzero");
    }
    for (fe v : {s.lambda, s.theta, s.mu})
        if (v >= f.size()) throw InputError("parameter outside " + std::to_string(f.size()) + "-element field");
    Module m;
    switch (s.family) {
    case Family::V0: m = blank(f, 1); break;
    case Family::V1:
        m = from_rows(f, {{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}, {{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}});
        break;
    case Family::Vext: {
        fe t = s.theta, l = s.lambda, u = s.mu;
        m = from_rows(f, {{{0, 0, 0, 0}, {t, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}},
                          {{0, 0, 0, 0}, {0, 0, 1, 0}, {l, 0, 0, 1}, {u, 0, 0, 0}},
                          {{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {l, 0, 0, 1}}});
        break;
    }
    case Family::M: m = module_m(f); break;
    case Family::N: m = module_n(f); break;
    default: m = table_module(s, f);
    }
    m.label = s.label(f);
    auto bad = check_representation(um(), m);
    if (!bad.empty()) throw std::logic_error(m.label + " violates " + bad.front());
    return m;
}

std::vector<StringBandSpec> zoo_members(int range, int nmax, const Field& f) {
    std::vector<StringBandSpec> out;
    out.push_back({Family::V0});
    out.push_back({Family::V1});
    for (Family fam : {Family::U1, Family::U2, Family::U3, Family::U4})
        for (int r = 1; r <= range; ++r) {
            StringBandSpec s{fam};
            s.r = r;
            out.push_back(s);
        }
    for (Family fam : {Family::Vfam1, Family::Vfam2, Family::Wfam1, Family::Wfam2})
        for (int t = 0; t <= range; ++t) {
            StringBandSpec s{fam};
            s.t = t;
            out.push_back(s);
        }
    for (Family fam : {Family::Aband, Family::Bband})
        for (int n = 1; n <= nmax; ++n)
            for (fe l = 1; l < f.size(); ++l) {
                StringBandSpec s{fam};
                s.n = n;
                s.lambda = l;
                out.push_back(s);
            }
    return out;
}

std::map<std::string, Subspace> named_subspaces(Family fam, const Field& f) {
    auto sp = [&](std::vector<std::vector<std::size_t>> s) { return Subspace::span(vectors(f, 8, s)); };
    // v1..v4 = 0..3, w1..w4 = 4..7
    if (fam == Family::M)
        return {{"M0", sp({{3}})},
                {"M1", sp({{0}, {1}, {2}, {3}})},
                {"M2", sp({{0}, {1}, {2}, {3}, {5}, {6}, {7}})},
                {"U", sp({{0}, {1}, {2}, {3}})},
                {"V", sp({{3}, {5}, {6}, {7}})},
                {"meet", sp({{3}})}};
    if (fam == Family::N)
        return {{"N0", sp({{1}, {2}, {3}})},
                {"N1", sp({{0}, {1}, {2}, {3}})},
                {"N2", sp({{0}, {1}, {2}, {3}, {7}})},
                {"U", sp({{0}, {1}, {2}, {3}})},
                {"V", sp({{1}, {2}, {3}, {7}})},
                {"meet", sp({{1}, {2}, {3}})}};
    throw InputError("no named subspaces for " + family_name(fam));
}

std::string dump_module(const Module& m, const std::string& name) {
    std::ostringstream o;
    std::string id = name.empty() ? m.label : name;
    o << "digraph \"" << id << "\" {\n";
    const Matrix* c = nullptr;
    for (std::size_t g = 0; g < m.names.size(); ++g)
        if (m.names[g] == "c") c = &m.gens[g];
    bool diag = c != nullptr;
    if (c)
        for (std::size_t i = 0; i < m.dim && diag; ++i)
            for (std::size_t j = 0; j < m.dim; ++j)
                if (i != j && c->at(i, j)) diag = false;
    for (std::size_t i = 0; i < m.dim; ++i) {
        o << "  z" << i + 1;
        if (diag) o << " [shape=" << (c->at(i, i) ? "point" : "circle") << "]";
        o << ";\n";
    }
    for (std::size_t g = 0; g < m.names.size(); ++g) {
        if (diag && m.names[g] == "c") continue;
        for (std::size_t j = 0; j < m.dim; ++j)
            for (std::size_t i = 0; i < m.dim; ++i)
                if (fe v = m.gens[g].at(i, j)) {
                    o << "  z" << j + 1 << " -> z" << i + 1 << " [label=\"" << m.names[g];
                    if (v != 1) o << " " << m.field.str(v);
                    o << "\"];\n";
                }
    }
    o << "}\n";
    return o.str();
}

Module pullback_to_double(const Module& m) {
    const HopfMap& pi = catalog::pi_double();
    const Algebra& src = pi.source().algebra();
    Module out{m.field, m.dim, {}, {}, m.label + "@D(H)"};
    for (int l : src.generator_letters()) {
        const std::string& n = src.alphabet()[l].name;
        out.names.push_back(n);
        out.gens.push_back(evaluate(um(), m, pi.image(n)));
    }
    return out;
}

std::map<std::string, Element> chevalley_involution() {
    const Algebra& a = um();
    return {{"a", a.letter("b")}, {"b", a.letter("a")}, {"c", a.letter("c")}};
}

// walks

int Walk::source(const QuiverData& q) const {
    if (letters.empty()) return vertex;
    const Arrow& a = q.arrows[static_cast<std::size_t>(letters[0].arrow)];
    return letters[0].inverse ? a.target : a.source;
}

int Walk::target(const QuiverData& q) const {
    if (letters.empty()) return vertex;
    const Arrow& a = q.arrows[static_cast<std::size_t>(letters.back().arrow)];
    return letters.back().inverse ? a.source : a.target;
}

Walk Walk::inverse(const QuiverData& q) const {
    Walk w{{}, target(q)};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->arrow, !it->inverse});
    return w;
}

Walk Walk::power(std::size_t k) const {
    Walk w{{}, vertex};
    for (std::size_t i = 0; i < k; ++i) w.letters.insert(w.letters.end(), letters.begin(), letters.end());
    return w;
}

std::string Walk::str(const QuiverData& q) const {
    if (letters.empty()) return "e" + std::to_string(vertex);
    std::string s;
    for (auto& l : letters) {
        if (!s.empty()) s += ' ';
        s += q.arrows[static_cast<std::size_t>(l.arrow)].name;
        if (l.inverse) s += "^-1";
    }
    return s;
}

Walk parse_walk(const QuiverData& q, const std::string& s) {
    std::istringstream in(s);
    std::string tok;
    Walk w;
    while (in >> tok) {
        if (tok.size() == 2 && tok[0] == 'e' && (tok[1] == '0' || tok[1] == '1')) {
            w.vertex = tok[1] - '0';
            continue;
        }
        bool inv = false;
        if (auto p = tok.find("^-1"); p != std::string::npos) {
            inv = true;
            tok = tok.substr(0, p);
        }
        w.letters.push_back({q.arrow(tok), inv});
    }
    if (!w.letters.empty()) w.vertex = w.source(q);
    if (!is_walk(q, w)) throw InputError("not a walk: " + s);
    return w;
}

bool is_walk(const QuiverData& q, const Walk& w) {
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
        Walk a{{w.letters[i]}, 0}, b{{w.letters[i + 1]}, 0};
        if (a.target(q) != b.source(q)) return false;
    }
    return true;
}

bool is_reduced(const QuiverData& q, const Walk& w) {
    if (!is_walk(q, w)) return false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i].arrow == w.letters[i + 1].arrow && w.letters[i].inverse != w.letters[i + 1].inverse)
            return false;
    return true;
}

bool is_string(const QuiverData& q, const Walk& w) {
    if (!is_reduced(q, w)) return false;
    const auto& L = w.letters;
    // maximal runs of direct or of inverse letters; every contained path lies in one
    for (std::size_t i = 0; i < L.size();) {
        std::size_t j = i;
        while (j < L.size() && L[j].inverse == L[i].inverse) ++j;
        std::vector<int> run;
        for (std::size_t k = i; k < j; ++k) run.push_back(L[k].arrow);
        if (L[i].inverse) std::reverse(run.begin(), run.end());
        if (q.zero_relation(run)) return false;
        for (std::size_t a = 0; a < run.size(); ++a)
            for (std::size_t b = a + 1; b <= run.size(); ++b)
                if (q.binomial_partner(std::vector<int>(run.begin() + static_cast<long>(a), run.begin() + static_cast<long>(b))))
                    return false;
        i = j;
    }
    return true;
}

bool is_band(const QuiverData& q, const Walk& w) {
    std::size_t n = w.length();
    if (n == 0 || !is_reduced(q, w) || w.source(q) != w.target(q)) return false;
    const WalkLetter &first = w.letters.front(), &last = w.letters.back();
    if (first.arrow == last.arrow && first.inverse != last.inverse) return false;
    std::size_t maxrel = 1;
    for (auto& r : q.relations)
        for (auto& p : r) maxrel = std::max(maxrel, p.size());
    // powers long enough to contain every cyclic subword of relation length
    std::size_t k = 2 + (maxrel + n - 1) / n;
    for (std::size_t e = 1; e <= k; ++e)
        if (!is_string(q, w.power(e))) return false;
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = w.letters[i] == w.letters[i - p];
        if (periodic) return false;
    }
    return true;
}

Walk band_representative(const QuiverData& q, const Walk& u) {
    std::optional<Walk> best;
    for (const Walk& base : {u, u.inverse(q)}) {
        for (std::size_t s = 0; s < base.length(); ++s) {
            Walk r{{}, 0};
            for (std::size_t i = 0; i < base.length(); ++i) r.letters.push_back(base.letters[(s + i) % base.length()]);
            r.vertex = r.source(q);
            if (!best || r.letters < best->letters) best = r;
        }
    }
    return best ? *best : u;
}

namespace {

std::vector<WalkLetter> all_letters(const QuiverData& q) {
    std::vector<WalkLetter> v;
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        for (bool inv : {false, true}) v.push_back({static_cast<int>(a), inv});
    return v;
}

// reduced walks of length exactly len
template <class Fn>
void reduced_walks(const QuiverData& q, std::size_t len, Fn fn) {
    auto letters = all_letters(q);
    Walk w;
    std::function<void()> rec = [&] {
        if (w.length() == len) {
            w.vertex = w.source(q);
            fn(w);
            return;
        }
        for (auto& l : letters) {
            w.letters.push_back(l);
            if (is_reduced(q, w)) rec();
            w.letters.pop_back();
        }
    };
    rec();
}

}  // namespace

std::vector<Walk> enumerate_strings(const QuiverData& q, std::size_t max_len) {
    if (max_len > 12) throw ResourceError("enumerate_strings: max_len " + std::to_string(max_len) + " exceeds 12");
    std::vector<Walk> out;
    for (int v = 0; v < q.vertices; ++v) out.push_back({{}, v});
    for (std::size_t len = 1; len <= max_len; ++len)
        reduced_walks(q, len, [&](const Walk& w) {
            if (is_string(q, w)) out.push_back(w);
        });
    return out;
}

std::vector<Walk> enumerate_bands(const QuiverData& q, std::size_t max_len) {
    if (max_len > 12) throw ResourceError("enumerate_bands: max_len " + std::to_string(max_len) + " exceeds 12");
    std::set<Walk> reps;
    for (std::size_t len = 1; len <= max_len; ++len)
        reduced_walks(q, len, [&](const Walk& w) {
            if (is_band(q, w)) reps.insert(band_representative(q, w));
        });
    return {reps.begin(), reps.end()};
}

std::vector<std::pair<std::string, Walk>> string_families(const QuiverData& q, std::size_t max_len) {
    auto w = [&](const std::string& s) { return parse_walk(q, s); };
    auto cat = [](Walk x, const Walk& y) {
        x.letters.insert(x.letters.end(), y.letters.begin(), y.letters.end());
        return x;
    };
    Walk s1 = w("al1 al2^-1"), s2 = w("al1^-1 al2"), s3 = w("be1 be2^-1"), s4 = w("be1^-1 be2");
    Walk a1 = w("al1"), a2 = w("al2"), b1 = w("be1"), b2 = w("be2");
    std::vector<std::pair<std::string, Walk>> fam{{"e0", {{}, 0}}, {"e1", {{}, 1}}};
    auto add = [&](const std::string& name, Walk x) {
        if (x.length() > max_len) return;
        x.vertex = x.source(q);
        fam.emplace_back(name, x);
        fam.emplace_back(name + "^-1", x.inverse(q));
    };
    std::vector<Walk> s{s1, s2, s3, s4};
    for (std::size_t r = 1; 2 * r <= max_len; ++r)
        for (std::size_t i = 0; i < 4; ++i) add("u" + std::to_string(i + 1) + "(" + std::to_string(r) + ")", s[i].power(r));
    for (std::size_t t = 0; 2 * t + 1 <= max_len; ++t) {
        std::string a = "(" + std::to_string(t) + ")";
        add("v1" + a, cat(s1.power(t), a1));
        add("v2" + a, cat(a2, s2.power(t)));
        add("w1" + a, cat(s3.power(t), b1));
        add("w2" + a, cat(b2, s4.power(t)));
    }
    return fam;
}

// classification

bool ClassificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ZooCheck& c) { return c.status == "pass"; });
}

const ZooCheck* ClassificationReport::find(const std::string& id) const {
    for (auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

struct Tally {
    ZooCheck c;
    std::mutex mu;
    explicit Tally(std::string id) { c.id = std::move(id); }
    void record(bool ok, const std::string& what) {
        std::lock_guard lock(mu);
        ++c.checked;
        if (!ok) c.failures.push_back(what);
    }
    ZooCheck done(std::string detail = "") {
        std::sort(c.failures.begin(), c.failures.end());
        c.status = c.failures.empty() ? "pass" : "fail";
        c.detail = std::move(detail);
        return c;
    }
};

}  // namespace

ZooCheck duality_table(int range, int nmax, const Field& f) {
    auto h = Hopf::of("um");
    Tally dual("duality-table");
    std::vector<std::pair<StringBandSpec, StringBandSpec>> duals;
    auto pair_of = [&](Family a, Family b, int r, int t, int n, fe l) {
        StringBandSpec x{a}, y{b};
        x.r = y.r = r;
        x.t = y.t = t;
        x.n = y.n = n;
        x.lambda = y.lambda = l;
        duals.emplace_back(x, y);
    };
    for (int r = 1; r <= range; ++r) {
        pair_of(Family::U1, Family::U4, r, 0, 1, 1);
        pair_of(Family::U2, Family::U3, r, 0, 1, 1);
    }
    for (int t = 0; t <= range; ++t) {
        pair_of(Family::Vfam1, Family::Wfam1, 1, t, 1, 1);
        pair_of(Family::Vfam2, Family::Wfam2, 1, t, 1, 1);
    }
    for (int n = 1; n <= nmax; ++n)
        for (fe l = 1; l < f.size(); ++l) pair_of(Family::Aband, Family::Bband, 1, 0, n, l);
    parallel_for(duals.size(), [&](std::size_t k) {
        auto& [x, y] = duals[k];
        Module dx = dual_module(*h, make_module(x, f));
        dual.record(is_isomorphic(dx, make_module(y, f)), x.label(f) + "* ~ " + y.label(f));
    });
    return dual.done();
}

ClassificationReport verify_classification(int range, int nmax, const Field& f) {
    ClassificationReport rep;
    auto specs = zoo_members(range, nmax, f);
    rep.members = specs.size();
    std::vector<Module> mods(specs.size());
    Tally valid("valid"), dims("dimension"), indec("indecomposable"), jordan("jordan-no-block-2"),
        pull("pullback-to-double"), ddual("double-dual");
    std::vector<std::string> uncertain;
    std::mutex umu;
    auto h = Hopf::of("um");
    const Algebra& dh = catalog::pi_double().source().algebra();
    parallel_for(specs.size(), [&](std::size_t i) {
        const auto& s = specs[i];
        std::string lab = s.label(f);
        try {
            mods[i] = make_module(s, f);
            valid.record(true, lab);
        } catch (const std::logic_error& e) {
            valid.record(false, e.what());
            mods[i] = Module{};
            return;
        }
        const Module& m = mods[i];
        dims.record(m.dim == s.dim(), lab);
        auto ir = indecomposability(m);
        indec.record(ir.indecomposable, lab);
        if (!ir.certain) {
            std::lock_guard lock(umu);
            uncertain.push_back(lab);
        }
        auto jt = jordan_type(m.act("a"));
        jordan.record(std::find(jt.begin(), jt.end(), 2) == jt.end(), lab);
        Module p = pullback_to_double(m);
        pull.record(check_representation(dh, p).empty() && is_indecomposable(p), lab);
        ddual.record(is_isomorphic(dual_module(*h, dual_module(*h, m)), m), lab);
    });
    std::string idetail = "End local for every member";
    if (!uncertain.empty()) idetail = std::to_string(uncertain.size()) + " members only heuristic";
    for (Tally* t : {&valid, &dims, &indec, &jordan, &pull, &ddual})
        rep.checks.push_back(t->done(t == &indec ? idetail : ""));

    // pairwise within equal dimension
    Tally pairs("pairwise-non-isomorphic");
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = i + 1; j < mods.size(); ++j)
            if (mods[i].dim && mods[i].dim == mods[j].dim) todo.emplace_back(i, j);
    parallel_for(todo.size(), [&](std::size_t k) {
        auto [i, j] = todo[k];
        auto r = isomorphism(mods[i], mods[j]);
        pairs.record(!r.iso && r.certain, mods[i].label + " ~ " + mods[j].label + (r.certain ? "" : " (uncertain)"));
    });
    rep.checks.push_back(pairs.done());

    rep.checks.push_back(duality_table(range, nmax, f));
    return rep;
}

TwistReport chevalley_twist_check(const Field& f, int n) {
    TwistReport rep;
    const Algebra& a = um();
    auto theta = chevalley_involution();
    {
        Module probe = make_module({Family::M}, f);
        Module back = twist(a, twist(a, probe, theta), theta);
        rep.involution = back.gens == probe.gens;
    }
    std::vector<fe> ls;
    for (fe l = 1; l < f.size(); ++l) ls.push_back(l);
    std::vector<int> inv(ls.size()), same(ls.size());
    parallel_for(ls.size(), [&](std::size_t i) {
        StringBandSpec s{Family::Aband};
        s.n = n;
        s.lambda = ls[i];
        Module tw = twist(a, make_module(s, f), theta);
        StringBandSpec t = s;
        t.lambda = f.inv(ls[i]);
        inv[i] = is_isomorphic(tw, make_module(t, f));
        same[i] = is_isomorphic(tw, make_module(s, f));
    });
    rep.checked = ls.size();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (inv[i]) rep.inverse_lambda.push_back(f.str(ls[i]));
        if (same[i]) rep.same_lambda.push_back(f.str(ls[i]));
    }
    return rep;
}

}  // namespace rjd
