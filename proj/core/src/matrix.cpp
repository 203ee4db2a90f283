#include "rjd/matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rjd {

namespace {
std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }
}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), wpr_(words_for(cols)), k_(f_.k()),
      d_(rows * k_ * wpr_, 0) {}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<fe>>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows[0].size();
    Matrix m(std::move(f), rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged rows");
        for (std::size_t c = 0; c < nc; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

fe Matrix::at(std::size_t r, std::size_t c) const {
    fe v = 0;
    std::size_t w = c >> 6, b = c & 63;
    for (int p = 0; p < k_; ++p) v |= static_cast<fe>((plane(r, p)[w] >> b & 1) << p);
    return v;
}

void Matrix::set(std::size_t r, std::size_t c, fe v) {
    std::size_t w = c >> 6, b = c & 63;
    for (int p = 0; p < k_; ++p) {
        auto& word = plane(r, p)[w];
        word = (word & ~(std::uint64_t{1} << b)) | (std::uint64_t{(v >> p) & 1u} << b);
    }
}

void Matrix::add_row_from(std::size_t dst, const Matrix& o, std::size_t src, fe s) {
    if (!s) return;
    if (k_ == 1) {
        auto* d = plane(dst, 0);
        const auto* x = o.plane(src, 0);
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= x[i];
        return;
    }
    for (int p = 0; p < k_; ++p) {
        fe m = f_.mul(s, static_cast<fe>(1u << p));
        const auto* x = o.plane(src, p);
        for (int q = 0; q < k_; ++q) {
            if (!(m >> q & 1)) continue;
            auto* d = plane(dst, q);
            for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= x[i];
        }
    }
}

void Matrix::scale_row(std::size_t r, fe s) {
    if (s == 1) return;
    std::vector<std::uint64_t> old(plane(r, 0), plane(r, 0) + k_ * wpr_);
    std::fill(plane(r, 0), plane(r, 0) + k_ * wpr_, 0);
    for (int p = 0; p < k_; ++p) {
        fe m = f_.mul(s, static_cast<fe>(1u << p));
        for (int q = 0; q < k_; ++q) {
            if (!(m >> q & 1)) continue;
            auto* d = plane(r, q);
            for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= old[p * wpr_ + i];
        }
    }
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(plane(a, 0), plane(a, 0) + k_ * wpr_, plane(b, 0));
}

bool Matrix::row_is_zero(std::size_t r) const {
    const auto* p = plane(r, 0);
    for (std::size_t i = 0; i < k_ * wpr_; ++i)
        if (p[i]) return false;
    return true;
}

std::size_t Matrix::leading(std::size_t r) const {
    for (std::size_t w = 0; w < wpr_; ++w) {
        std::uint64_t acc = 0;
        for (int p = 0; p < k_; ++p) acc |= plane(r, p)[w];
        if (acc) return w * 64 + std::countr_zero(acc);
    }
    return cols_;
}

std::vector<fe> Matrix::row_values(std::size_t r) const {
    std::vector<fe> v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void Matrix::append_row(const Matrix& o, std::size_t r) {
    if (o.cols_ != cols_) throw std::invalid_argument("append_row: width mismatch");
    d_.insert(d_.end(), o.plane(r, 0), o.plane(r, 0) + k_ * wpr_);
    ++rows_;
}

void Matrix::append_zero_row() {
    d_.resize(d_.size() + k_ * wpr_, 0);
    ++rows_;
}

void Matrix::truncate_rows(std::size_t n) {
    rows_ = std::min(rows_, n);
    d_.resize(rows_ * k_ * wpr_);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(f_, nr, nc);
    if (c0 == 0 && nc == cols_) {
        std::copy(plane(r0, 0), plane(r0, 0) + nr * k_ * wpr_, m.d_.begin());
        return m;
    }
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            if (fe v = at(r0 + r, c0 + c)) m.set(r, c, v);
    return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(f_, 0, cols_);
    for (auto i : idx) m.append_row(*this, i);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.f_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c)
            if (fe v = a.at(r, c)) m.set(r, c, v);
        for (std::size_t c = 0; c < b.cols_; ++c)
            if (fe v = b.at(r, c)) m.set(r, a.cols_ + c, v);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
    Matrix m = a;
    m.d_.insert(m.d_.end(), b.d_.begin(), b.d_.end());
    m.rows_ += b.rows_;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix m(f_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t w = 0; w < wpr_; ++w) {
            std::uint64_t acc = 0;
            for (int p = 0; p < k_; ++p) acc |= plane(r, p)[w];
            while (acc) {
                std::size_t c = w * 64 + std::countr_zero(acc);
                acc &= acc - 1;
                m.add_row_from(r, o, c, at(r, c));
            }
        }
    }
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < d_.size(); ++i) d_[i] ^= o.d_[i];
    return *this;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix m = *this;
    m += o;
    return m;
}

Matrix Matrix::scaled(fe s) const {
    Matrix m = *this;
    if (s == 0) return Matrix(f_, rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) m.scale_row(r, s);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix m(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < wpr_; ++w)
            for (int p = 0; p < k_; ++p) {
                std::uint64_t bits = plane(r, p)[w];
                while (bits) {
                    std::size_t c = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    m.plane(c, p)[r >> 6] |= std::uint64_t{1} << (r & 63);
                }
            }
    return m;
}

Matrix Matrix::power(unsigned e) const {
    Matrix r = identity(f_, rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(f_, rows_); }

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && d_ == o.d_;
}

fe Matrix::trace() const {
    fe t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t ^= at(i, i);
    return t;
}

std::string Matrix::str() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) s += " ";
            s += f_.k() == 1 ? std::to_string(at(r, c)) : f_.str(at(r, c));
        }
        s += "]\n";
    }
    return s;
}

RowReduction row_reduce(const Matrix& m) {
    RowReduction res;
    Matrix a = m;
    const Field& f = a.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        a.scale_row(r, f.inv(a.at(r, c)));
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != r)
                if (fe v = a.at(i, c)) a.add_row(i, r, v);
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    std::vector<char> is_piv(a.cols(), 0);
    for (auto c : res.pivots) is_piv[c] = 1;
    std::size_t nullity = a.cols() - r;
    res.kernel = Matrix(f, a.cols(), nullity);
    std::size_t j = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_piv[c]) continue;
        res.kernel.set(c, j, 1);
        for (std::size_t i = 0; i < r; ++i)
            if (fe v = a.at(i, c)) res.kernel.set(res.pivots[i], j, v);
        ++j;
    }
    res.rref = std::move(a);
    return res;
}

std::size_t rank(const Matrix& m) {
    Subspace s(m.field(), m.cols());
    return s.insert_rows(m);
}

std::optional<Matrix> invert(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: matrix is not square");
    std::size_t n = m.rows();
    auto rr = row_reduce(Matrix::hstack(m, Matrix::identity(m.field(), n)));
    if (rr.rank < n || (n && rr.pivots[n - 1] != n - 1)) return std::nullopt;
    return rr.rref.block(0, n, n, n);
}

Subspace Subspace::span(const Matrix& rows) {
    Subspace s(rows.field(), rows.cols());
    s.insert_rows(rows);
    return s;
}

void Subspace::reduce(Matrix& v, std::size_t r) const {
    for (std::size_t i = 0; i < piv_.size(); ++i)
        if (fe c = v.at(r, piv_[i])) v.add_row_from(r, rows_, i, c);
}

bool Subspace::contains(const Matrix& v, std::size_t r) const {
    Matrix w = v.row(r);
    reduce(w);
    return w.row_is_zero(0);
}

bool Subspace::insert(const Matrix& v, std::size_t r) {
    Matrix w = v.row(r);
    reduce(w);
    std::size_t p = w.leading(0);
    if (p == w.cols()) return false;
    w.scale_row(0, field().inv(w.at(0, p)));
    for (std::size_t i = 0; i < piv_.size(); ++i)
        if (fe c = rows_.at(i, p)) rows_.add_row_from(i, w, 0, c);
    rows_.append_row(w);
    piv_.push_back(p);
    return true;
}

std::size_t Subspace::insert_rows(const Matrix& m) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) n += insert(m, r);
    return n;
}

std::vector<fe> Subspace::coords(const Matrix& v, std::size_t r) const {
    std::vector<fe> c(piv_.size());
    for (std::size_t i = 0; i < piv_.size(); ++i) c[i] = v.at(r, piv_[i]);
    return c;
}

Matrix Subspace::canonical() const {
    std::vector<std::size_t> idx(piv_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return piv_[a] < piv_[b]; });
    return rows_.select_rows(idx);
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient() == o.ambient() && dim() == o.dim() && canonical() == o.canonical();
}

bool Subspace::contains(const Subspace& o) const {
    for (std::size_t r = 0; r < o.dim(); ++r)
        if (!contains(o.rows_, r)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    Subspace s = *this;
    s.insert_rows(o.rows_);
    return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
    // Zassenhaus: rows [u|u] and [v|0]
    std::size_t n = ambient();
    Matrix z(field(), 0, 2 * n);
    for (std::size_t r = 0; r < dim(); ++r) {
        z.append_zero_row();
        for (std::size_t c = 0; c < n; ++c)
            if (fe v = rows_.at(r, c)) {
                z.set(z.rows() - 1, c, v);
                z.set(z.rows() - 1, n + c, v);
            }
    }
    for (std::size_t r = 0; r < o.dim(); ++r) {
        z.append_zero_row();
        for (std::size_t c = 0; c < n; ++c)
            if (fe v = o.rows_.at(r, c)) z.set(z.rows() - 1, c, v);
    }
    auto rr = row_reduce(z);
    Subspace s(field(), n);
    for (std::size_t i = 0; i < rr.rank; ++i)
        if (rr.pivots[i] >= n) s.insert(rr.rref.block(i, n, 1, n));
    return s;
}

std::vector<std::size_t> Subspace::complement() const {
    std::vector<char> is_piv(ambient(), 0);
    for (auto p : piv_) is_piv[p] = 1;
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < ambient(); ++i)
        if (!is_piv[i]) c.push_back(i);
    return c;
}

}  // namespace rjd
