// element.hpp - letters, words and finitely supported linear combinations
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rjd/field.hpp"

namespace rjd {

// a word is a string of letter ids (one byte per letter)
using Word = std::string;

struct Letter {
    std::string name;
    int weight = 1;
    int gen = -1;          // index of the owning generator
    bool inverse = false;  // g^-1 letter of an integer generator
};

class Alphabet {
public:
    int add(Letter l);
    int size() const { return static_cast<int>(letters_.size()); }
    const Letter& operator[](int i) const { return letters_[i]; }
    std::optional<int> find(const std::string& name) const;
    int letter(const std::string& name) const;  // throws on unknown names

    int weight(const Word& w) const;
    // graded order: weighted degree, then length, then left-to-right letter index
    int compare(const Word& a, const Word& b) const;
    bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
    std::string str(const Word& w) const;

private:
    std::vector<Letter> letters_;
};

inline Word word_of(std::initializer_list<int> ids) {
    Word w;
    for (int i : ids) w.push_back(static_cast<char>(i));
    return w;
}
inline int letter_at(const Word& w, std::size_t i) { return static_cast<unsigned char>(w[i]); }

class Element {
public:
    using Terms = std::map<Word, fe>;

    Element() = default;
    static Element one() { return word(Word{}); }
    static Element word(const Word& w, fe c = 1) {
        Element e;
        e.add(w, c);
        return e;
    }
    static Element scalar(fe c) { return word(Word{}, c); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Terms& terms() const { return t_; }
    fe coeff(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? 0 : it->second;
    }
    fe constant() const { return coeff(Word{}); }

    Element& add(const Word& w, fe c) {
        if (!c) return *this;
        auto [it, fresh] = t_.try_emplace(w, c);
        if (!fresh && !(it->second ^= c)) t_.erase(it);
        return *this;
    }
    Element& operator+=(const Element& o) {
        for (auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    Element operator+(const Element& o) const {
        Element r = *this;
        r += o;
        return r;
    }
    Element scaled(const Field& f, fe s) const;
    // product in the free algebra (concatenation)
    Element concat(const Field& f, const Element& o) const;
    Word leading(const Alphabet& a) const;

    bool operator==(const Element& o) const { return t_ == o.t_; }
    bool operator!=(const Element& o) const { return t_ != o.t_; }
    bool operator<(const Element& o) const { return t_ < o.t_; }

    std::string str(const Alphabet& a, const Field& f = Field()) const;

private:
    Terms t_;
};

// element of A (x) A
class Tensor {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, fe>;

    static Tensor pure(const Element& l, const Element& r, const Field& f = Field());
    bool is_zero() const { return t_.empty(); }
    const Terms& terms() const { return t_; }
    Tensor& add(const Word& l, const Word& r, fe c) {
        if (!c) return *this;
        auto [it, fresh] = t_.try_emplace(Key{l, r}, c);
        if (!fresh && !(it->second ^= c)) t_.erase(it);
        return *this;
    }
    Tensor& operator+=(const Tensor& o) {
        for (auto& [k, c] : o.t_) add(k.first, k.second, c);
        return *this;
    }
    bool operator==(const Tensor& o) const { return t_ == o.t_; }
    bool operator!=(const Tensor& o) const { return t_ != o.t_; }
    std::string str(const Alphabet& a, const Field& f = Field()) const;

private:
    Terms t_;
};

}  // namespace rjd
