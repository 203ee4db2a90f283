#include "rjd/identities.hpp"

#include <map>
#include <random>
#include <regex>

#include "rjd/algebras.hpp"
#include "rjd/hopf.hpp"
#include "rjd/parallel.hpp"
#include "rjd/presentation.hpp"

namespace rjd {

namespace {

std::vector<IdentityRow> base_commutation(const std::string& group, const std::string& alg) {
    std::vector<IdentityRow> r = {
        {"eq-1", group, alg, "(x1 + x2)^{2n}", "x2^{2n} + [n] x21 x2^{2n-2}"},
        {"eq0", group, alg, "(x1 + x2)^{2n+1}", "x2^{2n+1} + x1 x2^{2n} + [n] x21 x2^{2n-1}"},
        {"eq1a", group, alg, "x21 x1", "x1 x21"},
        {"eq1b", group, alg, "x2^{m} x21^{2n+1}", "x21^{2n+1} (x1 + x2)^{m}"},
        {"eq2a", group, alg, "x2^{2n} x1", "x1 x2^{2n} + [n] x1 x21 x2^{2n-2}"},
        {"eq2b", group, alg, "x2^{m} x21^{2n}", "x21^{2n} x2^{m}"},
        {"eq3", group, alg, "x2^{2n+1} x1",
         "x1 x2^{2n+1} + [n] x21 (x2^{2n} + x1 x2^{2n-1} + x21 x2^{2n-2}) + [n+1] x21^{2n}"},
        {"eq3", group, alg, "x2^{2n+1} x1",
         "x1 x2^{2n+1} + [n] x21 (x2^{2n} + x1 x2^{2n-1} + x21 x2^{2n-2}) + [n+1] x21 x2^{2n}", "corrected",
         "last term read as (n+1) x21 x2^{2n}"},
        {"eq4a", group, alg, "g x1", "x1 g"},
        {"eq4b", group, alg, "g x21", "x21 g"},
        {"eq5a", group, alg, "g^{2m+1} x2^{n}", "(x1 + x2)^{n} g^{2m+1}"},
        {"eq5b", group, alg, "g^{2m} x2^{n}", "x2^{n} g^{2m}"},
    };
    return r;
}

std::vector<IdentityRow> base_dual(const std::string& group, const std::string& alg) {
    return {
        {"eq6a.1", group, alg, "w1 zeta^{n}", "(1 + zeta)^{n} w1"},
        {"eq6a.2", group, alg, "w2 zeta^{n}", "(1 + zeta)^{n} w2"},
        {"eq6b", group, alg, "w21 zeta", "zeta w21"},
        {"eq7a", group, alg, "w2^{2n} zeta", "zeta w2^{2n}"},
        {"eq7b", group, alg, "w2^{2n+1} zeta", "(1 + zeta) w2^{2n+1}"},
    };
}

long eval_int(const std::string& e, int m, int n) {
    long total = 0;
    std::size_t i = 0;
    while (i < e.size()) {
        int sign = 1;
        while (i < e.size() && (e[i] == '+' || e[i] == '-' || e[i] == ' ')) {
            if (e[i] == '-') sign = -sign;
            ++i;
        }
        long coef = 1;
        bool digits = false;
        std::size_t j = i;
        while (j < e.size() && std::isdigit(static_cast<unsigned char>(e[j]))) ++j;
        if (j > i) {
            coef = std::stol(e.substr(i, j - i));
            digits = true;
        }
        i = j;
        long val = 1;
        if (i < e.size() && (e[i] == 'm' || e[i] == 'n')) {
            val = e[i] == 'm' ? m : n;
            ++i;
        } else if (!digits) {
            throw InputError("bad template expression '" + e + "'");
        }
        total += sign * coef * val;
        while (i < e.size() && e[i] == ' ') ++i;
    }
    return total;
}

std::string expand_macros(const std::string& s, const std::string& xi) {
    static const std::vector<std::pair<std::regex, std::string>> macros = {
        {std::regex(R"(\bh\b)"), "(1 + g)"},
        {std::regex(R"(\bw\b)"), "(w1 + w2)"},
        {std::regex(R"(\bcbar\b)"), "(1 + c)"},
    };
    static const std::regex xi_re(R"(\bxi\b)");
    std::string r = s;
    for (auto& [re, rep] : macros) r = std::regex_replace(r, re, rep);
    return std::regex_replace(r, xi_re, xi);
}

}  // namespace

bool IdentityRow::uses(char var) const {
    static const std::regex slot(R"([\{\[]([^\}\]]*)[\}\]])");
    for (const std::string* s : {&lhs, &rhs})
        for (auto it = std::sregex_iterator(s->begin(), s->end(), slot); it != std::sregex_iterator(); ++it)
            if ((*it)[1].str().find(var) != std::string::npos) return true;
    return false;
}

bool IdentityRow::uses_xi() const {
    static const std::regex xi(R"(\bxi\b)");
    return std::regex_search(lhs, xi) || std::regex_search(rhs, xi);
}

std::string instantiate(const std::string& tmpl, int m, int n, const std::string& xi) {
    static const std::regex letter_pow(R"(([A-Za-z_][A-Za-z0-9_]*)\^\{([^}]*)\})");
    static const std::regex group_pow(R"(\^\{([^}]*)\})");
    static const std::regex coef(R"(\[([^\]]*)\])");
    std::string s = expand_macros(tmpl, xi);
    auto subst = [&](const std::string& in, const std::regex& re, auto fn) {
        std::string out;
        auto last = in.cbegin();
        for (auto it = std::sregex_iterator(in.begin(), in.end(), re); it != std::sregex_iterator(); ++it) {
            out.append(last, (*it)[0].first);
            out += fn(*it);
            last = (*it)[0].second;
        }
        out.append(last, in.cend());
        return out;
    };
    s = subst(s, letter_pow, [&](const std::smatch& mt) {
        long e = eval_int(mt[2].str(), m, n);
        return e < 0 ? std::string("0") : mt[1].str() + "^" + std::to_string(e);
    });
    s = subst(s, group_pow, [&](const std::smatch& mt) {
        long e = eval_int(mt[1].str(), m, n);
        if (e < 0) throw InputError("negative power of a sum in '" + tmpl + "'");
        return "^" + std::to_string(e);
    });
    s = subst(s, coef, [&](const std::smatch& mt) {
        long c = eval_int(mt[1].str(), m, n);
        return std::to_string(((c % 2) + 2) % 2);
    });
    return s;
}

std::vector<IdentityRow> identity_rows() {
    std::vector<IdentityRow> rows = {
        {"ba", "relbasic", "um", "b a", "a b + c"},
        {"ba2", "relbasic", "um", "b a^2", "a^2 b + a"},
        {"ba3", "relbasic", "um", "b a^3", "a^3 b + a^2 cbar"},
        {"b2a", "relbasic", "um", "b^2 a", "a b^2 + b"},
        {"b2a2", "relbasic", "um", "b^2 a^2", "a^2 b^2 + c"},
        {"b2a3", "relbasic", "um", "b^2 a^3", "a^3 b^2 + a^2 b + a cbar"},
        {"b3a", "relbasic", "um", "b^3 a", "a b^3 + b^2 cbar"},
        {"b3a2", "relbasic", "um", "b^3 a^2", "a^2 b^3 + a b^2 + b c"},
        {"b3a3", "relbasic", "um", "b^3 a^3", "a^3 b^3 + a^2 b^2 c + a b c"},
        {"ca", "relbasic", "um", "c a", "a c + a"},
        {"ca2", "relbasic", "um", "c a^2", "a^2 c"},
        {"ca3", "relbasic", "um", "c a^3", "a^3 cbar"},
        {"cb", "relbasic", "um", "c b", "b c + b"},
        {"cb2", "relbasic", "um", "c b^2", "b^2 c"},
        {"cb3", "relbasic", "um", "c b^3", "b^3 cbar"},
    };
    auto add = [&](std::vector<IdentityRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
    add(base_commutation("commutation", "Htilde"));
    add(base_dual("dual", "Ktilde"));
    add(base_commutation("dtilde", "Dtilde"));
    add(base_dual("dtilde", "Dtilde"));
    const std::string D = "dtilde", A = "Dtilde";
    add({
        {"zx21", D, A, "zeta x21", "x21 zeta"},
        {"w1x21", D, A, "w1 x21", "x21 w1"},
        {"w21x1", D, A, "w21 x1", "x1 w21"},
        {"w21g", D, A, "w21 g", "g w21"},
        {"zx1", D, A, "zeta^{n} x1", "x1 xi^{n}"},
        {"zx2", D, A, "zeta^{m} x2^{n}", "x2^{n} (1 + xi)^{m}"},
        {"w1x2e", D, A, "w1 x2^{2n}", "x2^{2n} w1 + [n] x1 x2^{2n-2} g"},
        {"w1x2o", D, A, "w1 x2^{2n+1}", "x2^{2n+1} w1 + x2^{2n} h + [n] x1 x2^{2n-1} g"},
        {"w21x2e", D, A, "w21 x2^{2n}", "x2^{2n} w21 + [n] x2^{2n-2} (x1 g w1 + h^2)"},
        {"w21x2o", D, A, "w21 x2^{2n+1}",
         "x2^{2n+1} w21 + x2^{2n} h w1 + [n] (x2^{2n-1} h^2 + x1 (x2^{2n-1} g w1 + x2^{2n-2} g h))"},
        {"w21ex2", D, A, "w21^{2n} x2", "x2 w21^{2n}"},
        {"w21ox2", D, A, "w21^{2n+1} x2", "x2 w21^{2n+1} + h w1 w21^{2n}"},
        {"w2ex1", D, A, "w2^{2n} x1", "x1 w^{2n} + [n] w1 w2^{2n-2}"},
        {"w2ox1", D, A, "w2^{2n+1} x1", "x1 w^{2n+1} + ([n] + h) w^{2n} + [n] w w2^{2n-1}"},
        {"w2x21e", D, A, "w2 x21^{2m}", "x21^{2m} w2"},
        {"w2x21o", D, A, "w2 x21^{2m+1}", "x21^{2m+1} w2 + x21^{2m} h x1"},
        {"w2ex21", D, A, "w2^{2n} x21", "x21 w2^{2n} + [n] (x1 w1 + h^2) w2^{2n-2}"},
        {"w2ox21", D, A, "w2^{2n+1} x21",
         "x21 w2^{2n+1} + x1 h w2^{2n} + [n] (x1 (w1 w2 + w21) + h w1 + h^2 w2) w2^{2n-1}"},
        {"w2ox21", D, A, "w2^{2n+1} x21",
         "x21 w2^{2n+1} + x1 h w2^{2n} + [n] (x1 (w1 w2 + w21) + h w1 + h^2 w2) w2^{2n-2}", "corrected",
         "last factor read as w2^{2n-2}"},
        {"w2x2e", D, A, "w2 x2^{2n}", "x2^{2n} w2 + [n] (x2^{2n-1} + x2^{2n-2} x1 g xi)"},
        {"w2x2o", D, A, "w2 x2^{2n+1}", "x2^{2n+1} w + x2^{2m} g zeta + [n] (x2^{2m} + x1 x2^{2m-1} g zeta)", "literal",
         "", 1, 0},
        {"w2x2o", D, A, "w2 x2^{2n+1}", "x2^{2n+1} w + x2^{2n} g zeta + [n] (x2^{2n} + x1 x2^{2n-1} g zeta)",
         "corrected", "m read as n"},
        {"w2ex2", D, A, "w2^{2n} x2", "x2 w2^{2n} + [n] (x2 w21 + g w) w2^{2n-2}"},
        {"w2ox2", D, A, "w2^{2n+1} x2",
         "x2 w2^{2n+1} + (x2 w1 + g zeta) w2^{2n} + [n] (g xi w21 w2^{2n-2} + x2 w21 w2^{2n-1} + g w2^{2n})"},
        {"w2g2", D, A, "w2^{m} g^{2n}", "g^{2n} w2^{m}"},
        {"w2g2o", D, A, "w2^{m} g^{2n+1}", "g^{2n+1} w^{m}"},
    });
    return rows;
}

namespace {

// failing instances of one reading; the first witness goes to *witness
std::vector<std::string> run_row(const Algebra& a, const IdentityRow& row, int bound, const std::string& xi,
                                 std::size_t& instances, std::string* witness) {
    auto mul = [&a](const Element& x, const Element& y) { return a.mul(x, y); };
    std::vector<std::string> failing;
    int mhi = row.uses('m') ? bound : row.m_min;
    int nhi = row.uses('n') ? bound : row.n_min;
    for (int m = row.m_min; m <= mhi; ++m)
        for (int n = row.n_min; n <= nhi; ++n) {
            std::string l = instantiate(row.lhs, m, n, xi), r = instantiate(row.rhs, m, n, xi);
            Element d = a.system().normal_form(parse_element(a.alphabet(), l, a.field(), mul));
            d += a.system().normal_form(parse_element(a.alphabet(), r, a.field(), mul));
            ++instances;
            if (d.is_zero()) continue;
            std::string at = "m=" + std::to_string(m) + ",n=" + std::to_string(n);
            if (witness && failing.empty()) {
                std::string diff = a.str(d);
                if (diff.size() > 160) diff = diff.substr(0, 160) + "...";
                *witness = at + ": " + l + " - (" + r + ") = " + diff;
            }
            failing.push_back(at);
        }
    return failing;
}

}  // namespace

std::vector<IdentityResult> check_identities(int exponent_bound) {
    auto rows = identity_rows();
    std::map<std::string, AlgebraPtr> algs;
    for (auto& r : rows)
        if (!algs.count(r.algebra)) algs[r.algebra] = Algebra::build(r.algebra);
    std::vector<IdentityResult> out(rows.size());
    parallel_for(rows.size(), [&](std::size_t i) {
        const IdentityRow& row = rows[i];
        const Algebra& a = *algs[row.algebra];
        IdentityResult res{row};
        res.failing = run_row(a, row, exponent_bound, "zeta", res.instances, &res.witness);
        res.holds = res.failing.empty();
        if (row.uses_xi()) {
            std::size_t k = 0;
            res.xi_shifted_failing = run_row(a, row, exponent_bound, "(1 + zeta)", k, nullptr);
        }
        out[i] = std::move(res);
    });
    return out;
}

std::vector<IdentityVerdict> summarize_identities(const std::vector<IdentityResult>& results) {
    std::vector<IdentityVerdict> out;
    std::map<std::string, std::size_t> pos;
    for (auto& r : results) {
        std::string key = r.row.group + "/" + r.row.id;
        auto it = pos.find(key);
        if (it == pos.end()) {
            pos[key] = out.size();
            IdentityVerdict v{r.row.id, r.row.group, r.row.algebra, "pending", ""};
            out.push_back(v);
            it = pos.find(key);
        }
        IdentityVerdict& v = out[it->second];
        if (r.row.reading == "literal") {
            if (r.holds) {
                v.status = "pass";
                v.detail = std::to_string(r.instances) + " instances";
            } else if (r.row.uses_xi()) {
                v.status = "xi-discrepancy";
                v.detail = "fails with xi read as zeta at " + std::to_string(r.failing.size()) + "/" +
                           std::to_string(r.instances) + " instances; " + r.witness + "; with xi read as 1+zeta: ";
                v.detail += r.xi_shifted_failing.empty()
                                ? std::string("holds")
                                : "fails at " + std::to_string(r.xi_shifted_failing.size()) + " instances";
            } else {
                v.status = "fail";
                v.detail = r.witness;
            }
        } else if (v.status == "fail") {
            if (r.holds) {
                v.status = "corrected";
                v.detail = "literal reading fails (" + v.detail + "); holds with " + r.row.note + " on " +
                           std::to_string(r.instances) + " instances";
            } else {
                v.detail += "; correction (" + r.row.note + ") also fails: " + r.witness;
            }
        }
    }
    return out;
}

AssociativityReport associativity_spot_check(const std::string& preset, std::size_t triples, int degree_bound,
                                             unsigned seed) {
    auto a = Algebra::build(preset);
    AssociativityReport rep;
    std::vector<Word> words;
    if (a->finite()) {
        words = a->basis();
    } else {
        words = sample_words(*a, 3 * triples, degree_bound, seed);
    }
    std::mt19937 rng(seed);
    for (std::size_t t = 0; t < triples; ++t) {
        Element x = Element::word(words[rng() % words.size()]);
        Element y = Element::word(words[rng() % words.size()]);
        Element z = Element::word(words[rng() % words.size()]);
        ++rep.triples;
        if (a->mul(x, a->mul(y, z)) == a->mul(a->mul(x, y), z)) continue;
        if (!rep.failures++) rep.witness = a->str(x) + " | " + a->str(y) + " | " + a->str(z);
    }
    return rep;
}

}  // namespace rjd
