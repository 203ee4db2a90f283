// presentation.hpp - textual presentations of algebras and their Hopf data
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rjd/element.hpp"

namespace rjd {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class CapKind { Nilpotent, Periodic, Natural, Integer };

struct GeneratorSpec {
    std::string name;
    CapKind kind = CapKind::Natural;
    int n = 0;                // exponent of the cap
    std::string replacement;  // periodic: x^n = replacement
    std::string definition;   // derived generators only
    bool derived() const { return !definition.empty(); }
    bool finite() const { return kind == CapKind::Nilpotent || kind == CapKind::Periodic; }
};

struct RelationSpec {
    std::string lhs, rhs;
    int line = 0;
    std::string text() const { return lhs + " = " + rhs; }
};

struct HopfSpec {
    std::map<std::string, std::string> coproduct, counit, antipode;
    bool present() const { return !coproduct.empty(); }
};

struct Presentation {
    std::string name;
    std::string title;
    std::vector<GeneratorSpec> gens;
    std::vector<RelationSpec> relations;
    HopfSpec hopf;
    bool pbw = true;

    Alphabet alphabet() const;
    const GeneratorSpec& gen(const std::string& name) const;
    bool finite() const;
};

Presentation parse_presentation(const std::string& text);
Presentation load_preset(const std::string& name);
std::vector<std::string> preset_names();
std::string preset_text(const std::string& name);

// expressions: sums of products of letters, ^n powers (negative for integer
// generators), parentheses, integer coefficients read mod 2
Element parse_element(const Alphabet& a, const std::string& s, const Field& f = Field());
// products formed with mul instead of word concatenation
using ElementProduct = std::function<Element(const Element&, const Element&)>;
Element parse_element(const Alphabet& a, const std::string& s, const Field& f, const ElementProduct& mul);
// sums of terms "lhs @ rhs"
Tensor parse_tensor(const Alphabet& a, const std::string& s, const Field& f = Field());

}  // namespace rjd
