// rewrite.hpp - straightening to PBW normal form and bounded completion
#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "rjd/element.hpp"
#include "rjd/presentation.hpp"

namespace rjd {

struct Rule {
    Word lhs;
    Element rhs;
};

class RewriteSystem {
public:
    RewriteSystem(Alphabet a, std::vector<Rule> rules, Field f = Field());
    RewriteSystem(const RewriteSystem&) = delete;
    RewriteSystem& operator=(const RewriteSystem&) = delete;

    const Alphabet& alphabet() const { return a_; }
    const std::vector<Rule>& rules() const { return rules_; }
    const Field& field() const { return f_; }

    Element normal_form(const Element& free) const;
    Element normal_form(const Word& w) const { return normal_form(Element::word(w)); }
    // product of normal forms
    Element mul(const Element& x, const Element& y) const;
    // normal word times an arbitrary word
    Element mul_word(const Word& normal, const Word& w) const;
    Element pow(const Element& x, unsigned n) const;
    bool is_normal(const Word& w) const;
    // irreducible words sorted by the order; weighted degree bound for infinite systems
    std::vector<Word> enumerate_basis(std::optional<int> degree_bound = std::nullopt) const;
    bool finite() const;

    Element parse(const std::string& s) const { return normal_form(parse_element(a_, s, f_)); }
    std::string str(const Element& e) const { return e.str(a_, f_); }
    std::string str(const Word& w) const { return a_.str(w); }
    std::string rule_str(const Rule& r) const { return a_.str(r.lhs) + " -> " + r.rhs.str(a_, f_); }

    std::size_t memo_size() const;

private:
    Element mul_letter(const Word& u, int x) const;
    const Rule* suffix_rule(const Word& w) const;

    Alphabet a_;
    Field f_;
    std::vector<Rule> rules_;
    std::vector<std::vector<int>> by_last_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Word, Element> memo_;
};

struct ConfluenceReport {
    bool completed = false;  // completion reached a fixed point within budget
    std::size_t rules = 0;
    std::size_t kb_pairs = 0;        // pairs processed during completion
    std::size_t critical_pairs = 0;  // re-checked on the final system
    std::size_t bounded_checks = 0;  // overlap words z^i y^j x^k checked
    int exponent_bound = 0;
    std::vector<std::string> unresolved;
    std::vector<std::string> unsound;       // defining relations not reducing to 0
    std::vector<std::string> cap_failures;  // expected caps of derived generators
    std::vector<std::string> shape_violations;
    std::string budget_error;

    bool confluent() const { return completed && unresolved.empty() && unsound.empty() && cap_failures.empty(); }
    std::string summary() const;
};

struct CompletionOptions {
    int exponent_bound = 6;
    std::size_t rule_budget = 600;
    std::size_t max_overlap = 48;
    bool bounded_checks = true;
};

struct Completion {
    std::shared_ptr<const RewriteSystem> system;
    ConfluenceReport report;
};

class ConfluenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Knuth-Bendix completion of the presentation, then certification
Completion complete(const Presentation& p, const CompletionOptions& opt = {});

// relations of a presentation as free-algebra elements lhs + rhs, with labels
std::vector<std::pair<std::string, Element>> defining_relations(const Presentation& p, const Alphabet& a);

}  // namespace rjd
