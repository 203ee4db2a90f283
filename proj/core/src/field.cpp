#include "rjd/field.hpp"

#include <map>
#include <mutex>

namespace rjd {

int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
    int dm = poly_degree(m);
    for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    std::uint64_t r = 0;
    a = poly_mod(a, m);
    int dm = poly_degree(m);
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> dm & 1) a ^= m;
    }
    return r;
}

std::uint64_t poly_factor(std::uint64_t p) {
    int dp = poly_degree(p);
    for (std::uint64_t d = 2; poly_degree(d) <= dp / 2; ++d)
        if (poly_mod(p, d) == 0) return d;
    return 0;
}

namespace {

std::uint32_t default_modulus(int k) {
    for (std::uint32_t m = (1u << k) | 1u; m < (2u << k); m += 2)
        if (!poly_factor(m)) return m;
    throw FieldError("no irreducible polynomial found");
}

std::string poly_str(std::uint64_t p, const char* var) {
    if (!p) return "0";
    std::string s;
    for (int d = poly_degree(p); d >= 0; --d) {
        if (!(p >> d & 1)) continue;
        if (!s.empty()) s += "+";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += var;
        else
            s += std::string(var) + "^" + std::to_string(d);
    }
    return s;
}

}  // namespace

Field::Field() {
    static const std::shared_ptr<const Tables> gf2 = Field::make(1).t_;
    t_ = gf2;
}

Field Field::make(int k, std::optional<std::uint32_t> modulus) {
    if (k < 1 || k > 16) throw FieldError("extension degree must lie in 1..16");
    std::uint32_t mod = modulus ? *modulus : default_modulus(k);
    if (poly_degree(mod) != k)
        throw FieldError("modulus " + poly_str(mod, "x") + " does not have degree " + std::to_string(k));
    if (auto f = poly_factor(mod))
        throw FieldError("modulus " + poly_str(mod, "x") + " is reducible: divisible by " + poly_str(f, "x"));

    static std::mutex mu;
    static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const Tables>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{k, mod}];
    if (slot) return Field(slot);

    auto t = std::make_shared<Tables>();
    t->k = k;
    t->mod = mod;
    std::uint32_t q1 = (1u << k) - 1;
    // search for a primitive element
    for (std::uint32_t g = (k == 1 ? 1 : 2);; ++g) {
        std::vector<fe> ex(2 * q1);
        std::uint32_t x = 1, n = 0;
        do {
            ex[n++] = static_cast<fe>(x);
            x = static_cast<std::uint32_t>(poly_mulmod(x, g, mod));
        } while (x != 1 && n < q1);
        if (n != q1) continue;
        for (std::uint32_t i = 0; i < q1; ++i) ex[i + q1] = ex[i];
        t->log.assign(q1 + 1, 0);
        for (std::uint32_t i = 0; i < q1; ++i) t->log[ex[i]] = i;
        t->exp = std::move(ex);
        t->gen = static_cast<fe>(g);
        break;
    }
    slot = t;
    return Field(slot);
}

fe Field::inv(fe a) const {
    if (!a) throw FieldError("division by zero");
    if (t_->k == 1) return 1;
    std::uint32_t q1 = size() - 1;
    return t_->exp[(q1 - t_->log[a]) % q1];
}

fe Field::pow(fe a, std::int64_t e) const {
    if (e == 0) return 1;
    if (!a) {
        if (e < 0) throw FieldError("division by zero");
        return 0;
    }
    if (t_->k == 1) return 1;
    std::int64_t q1 = size() - 1;
    std::int64_t l = (static_cast<std::int64_t>(t_->log[a]) * (e % q1)) % q1;
    if (l < 0) l += q1;
    return t_->exp[l];
}

std::string Field::str(fe a) const { return poly_str(a, "w"); }

Field make_field(int k, std::optional<std::uint32_t> modulus) { return Field::make(k, modulus); }

}  // namespace rjd
