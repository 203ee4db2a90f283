#include "rjd/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace rjd {

RewriteSystem::RewriteSystem(Alphabet a, std::vector<Rule> rules, Field f)
    : a_(std::move(a)), f_(std::move(f)), rules_(std::move(rules)), by_last_(a_.size()) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        if (r.lhs.empty()) throw std::logic_error("rule with empty left-hand side");
        for (auto& [w, c] : r.rhs.terms())
            if (!a_.less(w, r.lhs))
                throw std::logic_error("rule " + rule_str(r) + " does not decrease the order");
        by_last_[letter_at(r.lhs, r.lhs.size() - 1)].push_back(static_cast<int>(i));
    }
}

const Rule* RewriteSystem::suffix_rule(const Word& w) const {
    for (int i : by_last_[letter_at(w, w.size() - 1)]) {
        const Word& l = rules_[i].lhs;
        if (l.size() <= w.size() && w.compare(w.size() - l.size(), l.size(), l) == 0) return &rules_[i];
    }
    return nullptr;
}

Element RewriteSystem::mul_letter(const Word& u, int x) const {
    Word key = u;
    key.push_back(static_cast<char>(x));
    {
        std::shared_lock lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    Element res;
    if (const Rule* r = suffix_rule(key)) {
        Word pre = key.substr(0, key.size() - r->lhs.size());
        for (auto& [t, c] : r->rhs.terms()) res += mul_word(pre, t).scaled(f_, c);
    } else {
        res = Element::word(key);
    }
    std::unique_lock lock(mu_);
    memo_.emplace(key, res);
    return res;
}

Element RewriteSystem::mul_word(const Word& normal, const Word& w) const {
    Element cur = Element::word(normal);
    for (std::size_t i = 0; i < w.size() && !cur.is_zero(); ++i) {
        int x = letter_at(w, i);
        Element next;
        for (auto& [v, c] : cur.terms()) next += mul_letter(v, x).scaled(f_, c);
        cur = std::move(next);
    }
    return cur;
}

Element RewriteSystem::normal_form(const Element& free) const {
    Element r;
    for (auto& [w, c] : free.terms()) r += mul_word(Word{}, w).scaled(f_, c);
    return r;
}

Element RewriteSystem::mul(const Element& x, const Element& y) const {
    Element r;
    for (auto& [u, cu] : x.terms())
        for (auto& [v, cv] : y.terms()) r += mul_word(u, v).scaled(f_, f_.mul(cu, cv));
    return r;
}

Element RewriteSystem::pow(const Element& x, unsigned n) const {
    Element r = Element::one();
    for (unsigned i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

bool RewriteSystem::is_normal(const Word& w) const {
    for (auto& r : rules_)
        if (w.find(r.lhs) != Word::npos) return false;
    return true;
}

bool RewriteSystem::finite() const {
    // every letter must have a power that is reducible
    for (int x = 0; x < a_.size(); ++x) {
        bool capped = false;
        for (auto& r : rules_)
            if (r.lhs.find_first_not_of(static_cast<char>(x)) == Word::npos) capped = true;
        if (!capped) return false;
    }
    return true;
}

std::vector<Word> RewriteSystem::enumerate_basis(std::optional<int> degree_bound) const {
    if (!degree_bound && !finite()) throw InputError("basis of an infinite system needs a degree bound");
    std::vector<Word> out{Word{}};
    std::set<Word> seen{Word{}};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (int x = 0; x < a_.size(); ++x) {
            Word w = out[i];
            w.push_back(static_cast<char>(x));
            if (degree_bound && a_.weight(w) > *degree_bound) continue;
            if (suffix_rule(w) || seen.count(w)) continue;
            seen.insert(w);
            out.push_back(w);
            if (out.size() > 5000000) throw InputError("basis enumeration exceeded 5e6 words");
        }
    }
    std::sort(out.begin(), out.end(), [&](const Word& p, const Word& q) { return a_.less(p, q); });
    return out;
}

std::size_t RewriteSystem::memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
}

std::string ConfluenceReport::summary() const {
    std::ostringstream s;
    s << (confluent() ? "confluent" : "NOT confluent") << ": " << rules << " rules, " << critical_pairs
      << " critical pairs resolved, " << bounded_checks << " bounded overlaps (E=" << exponent_bound << ")";
    if (!budget_error.empty()) s << "; " << budget_error;
    for (auto& u : unresolved) s << "; unresolved " << u;
    for (auto& u : unsound) s << "; unsound " << u;
    for (auto& u : cap_failures) s << "; cap " << u;
    return s.str();
}

std::vector<std::pair<std::string, Element>> defining_relations(const Presentation& p, const Alphabet& a) {
    std::vector<std::pair<std::string, Element>> rels;
    for (const auto& g : p.gens) {
        int x = a.letter(g.name);
        Word xn(g.n, static_cast<char>(x));
        if (g.derived()) {
            rels.emplace_back(g.name + " := " + g.definition,
                              Element::word(Word(1, static_cast<char>(x))) + parse_element(a, g.definition));
            continue;  // caps of derived generators are checked, not imposed
        }
        if (g.kind == CapKind::Nilpotent)
            rels.emplace_back(g.name + "^" + std::to_string(g.n) + " = 0", Element::word(xn));
        else if (g.kind == CapKind::Periodic)
            rels.emplace_back(g.name + "^" + std::to_string(g.n) + " = " + g.replacement,
                              Element::word(xn) + parse_element(a, g.replacement));
        else if (g.kind == CapKind::Integer) {
            int y = a.letter(g.name + "^-1");
            rels.emplace_back(g.name + " " + g.name + "^-1 = 1", Element::word(word_of({x, y})) + Element::one());
            rels.emplace_back(g.name + "^-1 " + g.name + " = 1", Element::word(word_of({y, x})) + Element::one());
        }
    }
    for (const auto& r : p.relations)
        rels.emplace_back(r.text(), parse_element(a, r.lhs) + parse_element(a, r.rhs));
    return rels;
}

namespace {

// free-algebra Knuth-Bendix completion over GF(2)
class Completer {
public:
    Completer(const Alphabet& a, const CompletionOptions& opt) : a_(a), opt_(opt), pairs_(PairCmp{&a}) {}

    struct KBRule {
        Word lhs;
        Element rhs;
        bool alive = true;
    };

    void add(const Element& p) { pending_.push_back(p); }

    bool run(std::string& err) {
        while (true) {
            while (!pending_.empty()) {
                Element p = pending_.front();
                pending_.pop_front();
                orient(p);
                if (alive_count() > opt_.rule_budget) {
                    err = "rule budget " + std::to_string(opt_.rule_budget) + " exceeded while resolving " + last_pair_;
                    return false;
                }
            }
            if (pairs_.empty()) break;
            auto it = pairs_.begin();
            Pair pr = *it;
            pairs_.erase(it);
            const KBRule& r1 = rules_[pr.i];
            const KBRule& r2 = rules_[pr.j];
            if (!r1.alive || !r2.alive) continue;
            ++processed_;
            if (pr.word.size() > opt_.max_overlap) {
                err = "overlap length budget exceeded at " + a_.str(pr.word);
                return false;
            }
            last_pair_ = a_.str(pr.word);
            Word suffix = r2.lhs.substr(pr.k);
            Word prefix = r1.lhs.substr(0, r1.lhs.size() - pr.k);
            Element s;
            for (auto& [t, c] : r1.rhs.terms()) s.add(t + suffix, c);
            for (auto& [t, c] : r2.rhs.terms()) s.add(prefix + t, c);
            pending_.push_back(s);
        }
        // final interreduction of right-hand sides
        for (std::size_t i = 0; i < rules_.size(); ++i)
            if (rules_[i].alive) rules_[i].rhs = reduce(rules_[i].rhs);
        return true;
    }

    std::vector<Rule> rules() const {
        std::vector<Rule> out;
        for (auto& r : rules_)
            if (r.alive) out.push_back({r.lhs, r.rhs});
        std::sort(out.begin(), out.end(), [&](const Rule& x, const Rule& y) { return a_.less(x.lhs, y.lhs); });
        return out;
    }

    std::size_t processed() const { return processed_; }

private:
    struct Pair {
        Word word;
        std::size_t i, j, k;
    };
    struct PairCmp {
        const Alphabet* a;
        bool operator()(const Pair& x, const Pair& y) const {
            int c = a->compare(x.word, y.word);
            if (c) return c < 0;
            return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
        }
    };
    struct WordCmp {
        const Alphabet* a;
        bool operator()(const Word& x, const Word& y) const { return a->less(x, y); }
    };

    std::size_t alive_count() const {
        return static_cast<std::size_t>(std::count_if(rules_.begin(), rules_.end(), [](auto& r) { return r.alive; }));
    }

    Element reduce(const Element& p) const {
        std::map<Word, fe, WordCmp> work(WordCmp{&a_});
        auto put = [&](const Word& w, fe c) {
            auto [it, fresh] = work.try_emplace(w, c);
            if (!fresh && !(it->second ^= c)) work.erase(it);
        };
        for (auto& [w, c] : p.terms()) put(w, c);
        Element out;
        while (!work.empty()) {
            auto it = std::prev(work.end());
            Word w = it->first;
            fe c = it->second;
            work.erase(it);
            const KBRule* hit = nullptr;
            std::size_t pos = 0;
            for (auto& r : rules_) {
                if (!r.alive) continue;
                pos = w.find(r.lhs);
                if (pos != Word::npos) {
                    hit = &r;
                    break;
                }
            }
            if (!hit) {
                out.add(w, c);
                continue;
            }
            Word pre = w.substr(0, pos), post = w.substr(pos + hit->lhs.size());
            for (auto& [t, ct] : hit->rhs.terms()) put(pre + t + post, c & ct);
        }
        return out;
    }

    void orient(const Element& p0) {
        Element p = reduce(p0);
        if (p.is_zero()) return;
        Word lead = p.leading(a_);
        Element rhs = p;
        rhs.add(lead, 1);
        // retire rules whose left side contains the new one
        for (auto& r : rules_) {
            if (!r.alive || r.lhs.find(lead) == Word::npos) continue;
            r.alive = false;
            pending_.push_back(Element::word(r.lhs) + r.rhs);
        }
        rules_.push_back({lead, rhs, true});
        std::size_t n = rules_.size() - 1;
        for (std::size_t i = 0; i < n; ++i)
            if (rules_[i].alive) rules_[i].rhs = reduce(rules_[i].rhs);
        for (std::size_t i = 0; i <= n; ++i) {
            if (!rules_[i].alive) continue;
            overlaps(i, n);
            if (i != n) overlaps(n, i);
        }
    }

    void overlaps(std::size_t i, std::size_t j) {
        const Word& l1 = rules_[i].lhs;
        const Word& l2 = rules_[j].lhs;
        for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k)
            if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) pairs_.insert({l1 + l2.substr(k), i, j, k});
    }

    const Alphabet& a_;
    CompletionOptions opt_;
    std::vector<KBRule> rules_;
    std::deque<Element> pending_;
    std::set<Pair, PairCmp> pairs_;
    std::size_t processed_ = 0;
    std::string last_pair_ = "the defining relations";
};

std::vector<std::tuple<Word, std::size_t, std::size_t, std::size_t>> final_overlaps(const std::vector<Rule>& rules) {
    std::vector<std::tuple<Word, std::size_t, std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rules.size(); ++i)
        for (std::size_t j = 0; j < rules.size(); ++j) {
            const Word& l1 = rules[i].lhs;
            const Word& l2 = rules[j].lhs;
            for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k)
                if (l1.compare(l1.size() - k, k, l2, 0, k) == 0) out.emplace_back(l1 + l2.substr(k), i, j, k);
        }
    return out;
}

int cap_bound(const Presentation& p, const Alphabet& a, int letter, int E) {
    const Letter& l = a[letter];
    const GeneratorSpec& g = p.gens[l.gen];
    if (g.finite()) return std::min(E, g.n);
    return E;
}

}  // namespace

Completion complete(const Presentation& p, const CompletionOptions& opt) {
    Alphabet a = p.alphabet();
    auto rels = defining_relations(p, a);
    Completer kb(a, opt);
    for (auto& [label, e] : rels) kb.add(e);
    ConfluenceReport rep;
    rep.exponent_bound = opt.exponent_bound;
    std::string err;
    rep.completed = kb.run(err);
    rep.budget_error = err;
    rep.kb_pairs = kb.processed();
    auto rules = kb.rules();
    rep.rules = rules.size();
    auto sys = std::make_shared<RewriteSystem>(a, rules);
    const RewriteSystem& S = *sys;

    // every overlap of the final rules must resolve
    for (auto& [w, i, j, k] : final_overlaps(rules)) {
        Word suffix = rules[j].lhs.substr(k);
        Word prefix = rules[i].lhs.substr(0, rules[i].lhs.size() - k);
        Element left, right;
        for (auto& [t, c] : rules[i].rhs.terms()) left.add(t + suffix, c);
        for (auto& [t, c] : rules[j].rhs.terms()) right.add(prefix + t, c);
        ++rep.critical_pairs;
        if (S.normal_form(left) != S.normal_form(right)) rep.unresolved.push_back(a.str(w));
    }

    for (auto& [label, e] : rels)
        if (!S.normal_form(e).is_zero()) rep.unsound.push_back(label);

    for (const auto& g : p.gens) {
        if (!g.derived() || !g.finite()) continue;
        int x = a.letter(g.name);
        Element cap = Element::word(Word(g.n, static_cast<char>(x)));
        if (g.kind == CapKind::Periodic) cap += parse_element(a, g.replacement);
        if (!S.normal_form(cap).is_zero()) rep.cap_failures.push_back(g.name + "^" + std::to_string(g.n));
    }

    for (auto& r : rules) {
        const Word& l = r.lhs;
        bool power = l.find_first_not_of(l[0]) == Word::npos;
        bool descent = l.size() == 2 && letter_at(l, 0) > letter_at(l, 1);
        bool inverse_pair = l.size() == 2 && a[letter_at(l, 0)].gen == a[letter_at(l, 1)].gen &&
                            a[letter_at(l, 0)].inverse != a[letter_at(l, 1)].inverse;
        if (!power && !descent && !inverse_pair) rep.shape_violations.push_back(S.rule_str(r));
    }

    if (opt.bounded_checks && p.pbw && rep.completed) {
        int E = opt.exponent_bound;
        int n = a.size();
        auto pw = [](int x, int e) { return Word(e, static_cast<char>(x)); };
        auto check = [&](const Word& w, const std::vector<Word>& parts) {
            ++rep.bounded_checks;
            Element whole = S.normal_form(w);
            Element acc = Element::one();
            for (auto& part : parts) acc = S.mul(acc, S.normal_form(part));
            if (acc != whole) rep.unresolved.push_back(a.str(w) + " (bracketing)");
        };
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < y; ++x) {
                if (a[x].gen == a[y].gen) continue;
                for (int j = 1; j <= cap_bound(p, a, y, E); ++j)
                    for (int i = 1; i <= cap_bound(p, a, x, E); ++i) check(pw(y, j) + pw(x, i), {pw(y, j), pw(x, i)});
            }
        for (int z = 0; z < n; ++z)
            for (int y = 0; y < z; ++y)
                for (int x = 0; x < y; ++x) {
                    if (a[x].gen == a[y].gen || a[y].gen == a[z].gen) continue;
                    int Ez = std::min(cap_bound(p, a, z, E), 3), Ey = std::min(cap_bound(p, a, y, E), 3),
                        Ex = std::min(cap_bound(p, a, x, E), 3);
                    for (int k = 1; k <= Ez; ++k)
                        for (int j = 1; j <= Ey; ++j)
                            for (int i = 1; i <= Ex; ++i) {
                                Word w = pw(z, k) + pw(y, j) + pw(x, i);
                                check(w, {pw(z, k), pw(y, j) + pw(x, i)});
                                check(w, {pw(z, k) + pw(y, j), pw(x, i)});
                            }
                }
    }
    return {sys, rep};
}

}  // namespace rjd
