// oracle.hpp - naive reference computations used only by the tests
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

// schoolbook GF(2)[x] product reduced modulo a degree-k polynomial
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int k) {
    std::uint64_t p = 0;
    for (int i = 0; i < 32; ++i)
        if (b >> i & 1) p ^= static_cast<std::uint64_t>(a) << i;
    for (int d = 63; d >= k; --d)
        if (p >> d & 1) p ^= static_cast<std::uint64_t>(modulus) << (d - k);
    return static_cast<std::uint32_t>(p);
}

using Mat = std::vector<std::vector<int>>;  // entries 0/1

inline Mat zero(std::size_t n) { return Mat(n, std::vector<int>(n, 0)); }

inline Mat mul(const Mat& x, const Mat& y) {
    std::size_t n = x.size(), m = y[0].size(), l = y.size();
    Mat r(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            int s = 0;
            for (std::size_t t = 0; t < l; ++t) s ^= x[i][t] & y[t][j];
            r[i][j] = s;
        }
    return r;
}

inline Mat add(Mat x, const Mat& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x[i].size(); ++j) x[i][j] ^= y[i][j];
    return x;
}

inline bool is_zero(const Mat& x) {
    for (auto& r : x)
        for (int v : r)
            if (v) return false;
    return true;
}

inline std::size_t rank(Mat m) {
    std::size_t r = 0, cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !m[p][c]) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
        ++r;
    }
    return r;
}

// block sizes of a nilpotent matrix from the ranks of its powers
inline std::vector<std::size_t> jordan(const Mat& a) {
    std::size_t n = a.size();
    std::vector<std::size_t> rk{n};
    Mat p = a;
    while (rk.back() > 0) {
        rk.push_back(rank(p));
        p = mul(p, a);
    }
    // number of blocks of size >= k is rk[k-1] - rk[k]
    std::vector<std::size_t> parts;
    for (std::size_t k = rk.size() - 1; k >= 1; --k) {
        std::size_t ge = rk[k - 1] - rk[k], ge_next = k + 1 < rk.size() ? rk[k] - rk[k + 1] : 0;
        for (std::size_t i = 0; i < ge - ge_next; ++i) parts.push_back(k);
    }
    return parts;
}

// relations of u(m): a^4 = b^4 = 0, c^2 = c, ab + ba = c, ac + ca = a, bc + cb = b
inline bool um_relations(const Mat& a, const Mat& b, const Mat& c) {
    Mat a2 = mul(a, a), b2 = mul(b, b);
    return is_zero(mul(a2, a2)) && is_zero(mul(b2, b2)) && mul(c, c) == c && add(mul(a, b), mul(b, a)) == c &&
           add(mul(a, c), mul(c, a)) == a && add(mul(b, c), mul(c, b)) == b;
}

// string and band modules over GF(2) with lambda = 1, written straight from the action tables:
// a z_i = k_i z_{i+1}, b z_i = m_i z_{i-1} + x_i z_{i+3}, c z_i = n_i z_i (1-based, columns)
struct TableModule {
    Mat a, b, c;
};

inline TableModule table_module(const std::string& fam, std::size_t d) {
    auto mod4 = [](std::size_t i, std::size_t r) { return i % 4 == r; };
    TableModule m{zero(d), zero(d), zero(d)};
    bool band = fam == "A" || fam == "B";
    for (std::size_t i = 1; i <= d; ++i) {
        bool k = true, mu = true;
        int nu = 0;
        if (fam == "U1" || fam == "V1" || fam == "A") {
            k = !mod4(i, 0) && (fam == "V1" || fam == "A" || i != d);
            mu = !mod4(i, 2) && i != 1;
            nu = (i + 1) % 2;
        } else if (fam == "U2" || fam == "V2") {
            k = !mod4(i, 3) && (fam == "U2" || i != d);
            mu = !mod4(i, 1);
            nu = i % 2;
        } else if (fam == "U3" || fam == "W1" || fam == "B") {
            k = !mod4(i, 0) && (fam == "B" || i != d);
            mu = !mod4(i, 0) && i != 1;
            nu = i % 2;
        } else if (fam == "U4" || fam == "W2") {
            k = !mod4(i, 1) && (fam == "U4" || i != d);
            mu = !mod4(i, 1) && (fam == "U4" || i != 1);
            nu = (i + 1) % 2;
        }
        if (k && i < d) m.a[i][i - 1] = 1;
        if (mu && i > 1) m.b[i - 2][i - 1] = 1;
        if (band && mod4(i, 1) && i + 3 <= d) m.b[i + 2][i - 1] = 1;
        m.c[i - 1][i - 1] = nu;
    }
    return m;
}

}  // namespace oracle
