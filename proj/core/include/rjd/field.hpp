// field.hpp - GF(2^k) arithmetic with log/antilog tables
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rjd {

using fe = std::uint16_t;

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// polynomial arithmetic over GF(2) on bitmasks
int poly_degree(std::uint64_t p);
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
// smallest nontrivial factor, or 0 when irreducible
std::uint64_t poly_factor(std::uint64_t p);

class Field {
public:
    Field();  // GF(2)
    static Field make(int k, std::optional<std::uint32_t> modulus = std::nullopt);

    int k() const { return t_->k; }
    std::uint32_t modulus() const { return t_->mod; }
    std::uint32_t size() const { return 1u << t_->k; }

    static fe add(fe a, fe b) { return a ^ b; }
    fe mul(fe a, fe b) const {
        if (!a || !b) return 0;
        if (t_->k == 1) return 1;
        return t_->exp[t_->log[a] + t_->log[b]];
    }
    fe inv(fe a) const;
    fe div(fe a, fe b) const { return mul(a, inv(b)); }
    fe pow(fe a, std::int64_t e) const;
    fe frobenius(fe a) const { return mul(a, a); }
    // a fixed primitive element
    fe generator() const { return t_->gen; }
    std::string str(fe a) const;

    bool operator==(const Field& o) const { return t_->k == o.t_->k && t_->mod == o.t_->mod; }

private:
    struct Tables {
        int k = 1;
        std::uint32_t mod = 3;
        fe gen = 1;
        std::vector<fe> exp;       // length 2(q-1)
        std::vector<std::uint32_t> log;
    };
    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

Field make_field(int k, std::optional<std::uint32_t> modulus = std::nullopt);

}  // namespace rjd
