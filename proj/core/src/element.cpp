#include "rjd/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace rjd {

int Alphabet::add(Letter l) {
    if (find(l.name)) throw std::invalid_argument("duplicate letter " + l.name);
    if (letters_.size() >= 64) throw std::invalid_argument("too many letters");
    letters_.push_back(std::move(l));
    return size() - 1;
}

std::optional<int> Alphabet::find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (letters_[i].name == name) return i;
    return std::nullopt;
}

int Alphabet::letter(const std::string& name) const {
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown generator symbol '" + name + "'");
}

int Alphabet::weight(const Word& w) const {
    int s = 0;
    for (unsigned char c : w) s += letters_[c].weight;
    return s;
}

int Alphabet::compare(const Word& a, const Word& b) const {
    int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[i]) ? -1 : 1;
    return 0;
}

std::string Alphabet::str(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        const Letter& l = letters_[static_cast<unsigned char>(w[i])];
        std::size_t n = j - i;
        if (!s.empty()) s += " ";
        if (l.inverse) {
            std::string base = l.name.substr(0, l.name.find('^'));
            s += base + "^-" + std::to_string(n);
        } else {
            s += l.name;
            if (n > 1) s += "^" + std::to_string(n);
        }
        i = j;
    }
    return s;
}

Element Element::scaled(const Field& f, fe s) const {
    if (s == 1) return *this;
    Element r;
    if (!s) return r;
    for (auto& [w, c] : t_) r.add(w, f.mul(c, s));
    return r;
}

Element Element::concat(const Field& f, const Element& o) const {
    Element r;
    for (auto& [a, ca] : t_)
        for (auto& [b, cb] : o.t_) r.add(a + b, f.mul(ca, cb));
    return r;
}

Word Element::leading(const Alphabet& a) const {
    if (t_.empty()) throw std::logic_error("leading word of zero");
    const Word* best = nullptr;
    for (auto& [w, c] : t_)
        if (!best || a.less(*best, w)) best = &w;
    return *best;
}

namespace {
std::string coeff_prefix(const Field& f, fe c) {
    if (c == 1) return "";
    return "(" + f.str(c) + ")";
}
}  // namespace

std::string Element::str(const Alphabet& a, const Field& f) const {
    if (t_.empty()) return "0";
    std::vector<const Word*> ws;
    for (auto& [w, c] : t_) ws.push_back(&w);
    std::sort(ws.begin(), ws.end(), [&](auto x, auto y) { return a.less(*y, *x); });
    std::string s;
    for (auto* w : ws) {
        if (!s.empty()) s += " + ";
        fe c = t_.at(*w);
        if (w->empty())
            s += c == 1 ? "1" : f.str(c);
        else
            s += coeff_prefix(f, c) + a.str(*w);
    }
    return s;
}

Tensor Tensor::pure(const Element& l, const Element& r, const Field& f) {
    Tensor t;
    for (auto& [a, ca] : l.terms())
        for (auto& [b, cb] : r.terms()) t.add(a, b, f.mul(ca, cb));
    return t;
}

std::string Tensor::str(const Alphabet& a, const Field& f) const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : t_) {
        if (!s.empty()) s += " + ";
        s += coeff_prefix(f, c) + a.str(k.first) + " @ " + a.str(k.second);
    }
    return s;
}

}  // namespace rjd
