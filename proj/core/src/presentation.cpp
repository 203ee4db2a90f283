#include "rjd/presentation.hpp"

#include <cctype>
#include <sstream>

namespace rjd {

const std::map<std::string, std::string>& preset_table();  // generated

namespace {

struct Token {
    enum Kind { Ident, Number, Sym, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i)});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i)});
            i = j;
        } else if (std::string("+-*^()@").find(c) != std::string::npos) {
            out.push_back({Token::Sym, std::string(1, c)});
            ++i;
        } else {
            throw InputError(std::string("unexpected character '") + c + "' in \"" + s + "\"");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

class Parser {
public:
    Parser(const Alphabet& a, const Field& f, const std::string& s, ElementProduct mul = nullptr)
        : a_(a), f_(f), src_(s), toks_(tokenize(s)), mul_(std::move(mul)) {}

    Element parse_all() {
        Element e = sum();
        expect_end();
        return e;
    }

    Tensor parse_tensor_all() {
        Tensor t;
        do {
            Element l = product();
            if (!accept("@")) fail("expected '@'");
            Element r = product();
            t += Tensor::pure(l, r, f_);
        } while (accept("+") || accept("-"));
        expect_end();
        return t;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept(const char* sym) {
        if (peek().kind == Token::Sym && peek().text == sym) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError(msg + " in \"" + src_ + "\"");
    }
    void expect_end() const {
        if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    }

    Element sum() {
        Element e = product();
        while (accept("+") || accept("-")) e += product();
        return e;
    }

    bool starts_factor() const {
        const Token& t = peek();
        return t.kind == Token::Ident || t.kind == Token::Number || (t.kind == Token::Sym && t.text == "(");
    }

    Element product() {
        if (!starts_factor()) fail("expected a term");
        Element e = factor();
        while (true) {
            accept("*");
            if (!starts_factor()) break;
            e = times(e, factor());
        }
        return e;
    }

    long exponent() {
        bool neg = accept("-");
        if (peek().kind != Token::Number) fail("expected an exponent");
        long n = std::stol(toks_[pos_++].text);
        return neg ? -n : n;
    }

    Element power(const Element& base, long n) {
        Element r = Element::one();
        for (long i = 0; i < n; ++i) r = times(r, base);
        return r;
    }

    Element times(const Element& x, const Element& y) const { return mul_ ? mul_(x, y) : x.concat(f_, y); }

    Element factor() {
        const Token t = peek();
        ++pos_;
        if (t.kind == Token::Number) {
            Element e = Element::scalar(static_cast<fe>((t.text.back() - '0') & 1));
            if (accept("^")) exponent();
            return e;
        }
        if (t.kind == Token::Sym) {  // "("
            Element e = sum();
            if (!accept(")")) fail("expected ')'");
            if (accept("^")) {
                long n = exponent();
                if (n < 0) fail("negative power of a sum");
                return power(e, n);
            }
            return e;
        }
        auto id = a_.find(t.text);
        if (!id) fail("unknown generator symbol '" + t.text + "'");
        long n = 1;
        if (accept("^")) n = exponent();
        if (n < 0) {
            auto inv = a_.find(t.text + "^-1");
            if (!inv) fail("negative power of non-invertible generator '" + t.text + "'");
            return power(Element::word(Word(1, static_cast<char>(*inv))), -n);
        }
        return power(Element::word(Word(1, static_cast<char>(*id))), n);
    }

    const Alphabet& a_;
    const Field& f_;
    std::string src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    ElementProduct mul_;
};

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_eq(const std::string& s, int line) {
    auto p = s.find('=');
    if (p == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected '='");
    return {trim(s.substr(0, p)), trim(s.substr(p + 1))};
}

}  // namespace

Element parse_element(const Alphabet& a, const std::string& s, const Field& f) {
    return Parser(a, f, s).parse_all();
}

Element parse_element(const Alphabet& a, const std::string& s, const Field& f, const ElementProduct& mul) {
    return Parser(a, f, s, mul).parse_all();
}

Tensor parse_tensor(const Alphabet& a, const std::string& s, const Field& f) {
    return Parser(a, f, s).parse_tensor_all();
}

Alphabet Presentation::alphabet() const {
    // derived generators may refer to later letters, so weights come second
    Alphabet base;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        base.add(Letter{gens[i].name, 1, static_cast<int>(i), false});
        if (gens[i].kind == CapKind::Integer) base.add(Letter{gens[i].name + "^-1", 1, static_cast<int>(i), true});
    }
    Alphabet a;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i];
        Letter l{g.name, 1, static_cast<int>(i), false};
        if (g.derived()) {
            Element d = parse_element(base, g.definition);
            int w = 0;
            for (auto& [word, c] : d.terms()) w = std::max(w, base.weight(word));
            l.weight = std::max(w, 1);
        }
        a.add(l);
        if (g.kind == CapKind::Integer) a.add(Letter{g.name + "^-1", 1, static_cast<int>(i), true});
    }
    return a;
}

const GeneratorSpec& Presentation::gen(const std::string& n) const {
    for (auto& g : gens)
        if (g.name == n) return g;
    throw InputError("unknown generator '" + n + "'");
}

bool Presentation::finite() const {
    for (auto& g : gens)
        if (!g.derived() && !g.finite()) return false;
    return true;
}

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        std::istringstream ls(s);
        std::string kw;
        ls >> kw;
        std::string rest = trim(s.substr(kw.size()));
        auto bad = [&](const std::string& m) { return InputError("line " + std::to_string(line) + ": " + m); };
        if (kw == "name") {
            p.name = rest;
        } else if (kw == "title") {
            p.title = rest;
        } else if (kw == "pbw") {
            p.pbw = rest != "no";
        } else if (kw == "gen") {
            GeneratorSpec g;
            std::string head = rest;
            if (auto d = rest.find(":="); d != std::string::npos) {
                g.definition = trim(rest.substr(d + 2));
                head = trim(rest.substr(0, d));
            }
            std::string repl;
            if (auto e = head.find('='); e != std::string::npos) {
                repl = trim(head.substr(e + 1));
                head = trim(head.substr(0, e));
            }
            std::istringstream hs(head);
            std::string kind;
            hs >> g.name >> kind;
            if (g.name.empty()) throw bad("generator without a name");
            if (kind == "nilpotent" || kind == "periodic") {
                if (!(hs >> g.n) || g.n < 2) throw bad("cap exponent must be at least 2");
                g.kind = kind == "nilpotent" ? CapKind::Nilpotent : CapKind::Periodic;
                if (g.kind == CapKind::Periodic) {
                    if (repl.empty()) throw bad("periodic cap needs a replacement");
                    g.replacement = repl;
                }
            } else if (kind == "natural" || kind.empty()) {
                g.kind = CapKind::Natural;
            } else if (kind == "integer") {
                if (g.derived()) throw bad("derived generators cannot be invertible");
                g.kind = CapKind::Integer;
            } else {
                throw bad("unknown cap kind '" + kind + "'");
            }
            p.gens.push_back(g);
        } else if (kw == "rel") {
            auto [l, r] = split_eq(rest, line);
            p.relations.push_back({l, r, line});
        } else if (kw == "coproduct" || kw == "counit" || kw == "antipode") {
            auto [l, r] = split_eq(rest, line);
            auto& m = kw == "coproduct" ? p.hopf.coproduct : kw == "counit" ? p.hopf.counit : p.hopf.antipode;
            m[l] = r;
        } else {
            throw bad("unknown keyword '" + kw + "'");
        }
    }
    // validate all expressions against the alphabet
    Alphabet a = p.alphabet();
    for (auto& r : p.relations) {
        parse_element(a, r.lhs);
        parse_element(a, r.rhs);
    }
    for (auto& g : p.gens)
        if (!g.replacement.empty()) parse_element(a, g.replacement);
    for (auto& [k, v] : p.hopf.coproduct) parse_tensor(a, v);
    for (auto& [k, v] : p.hopf.counit) parse_element(a, v);
    for (auto& [k, v] : p.hopf.antipode) parse_element(a, v);
    return p;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> n;
    for (auto& [k, v] : preset_table()) n.push_back(k);
    return n;
}

std::string preset_text(const std::string& name) {
    auto& t = preset_table();
    auto it = t.find(name);
    if (it == t.end()) throw InputError("unknown preset '" + name + "'");
    return it->second;
}

Presentation load_preset(const std::string& name) { return parse_presentation(preset_text(name)); }

}  // namespace rjd
