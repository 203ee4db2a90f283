// matrix.hpp - dense matrices over GF(2^k), rows stored as k bit-planes
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rjd/field.hpp"

namespace rjd {

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);
    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, const std::vector<std::vector<fe>>& rows);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    fe at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, fe v);
    void flip(std::size_t r, std::size_t c) { set(r, c, at(r, c) ^ 1); }

    // row(dst) += s * row(src)
    void add_row(std::size_t dst, std::size_t src, fe s = 1) { add_row_from(dst, *this, src, s); }
    void add_row_from(std::size_t dst, const Matrix& o, std::size_t src, fe s = 1);
    void scale_row(std::size_t r, fe s);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;
    // first nonzero column of row r, or cols()
    std::size_t leading(std::size_t r) const;
    Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }
    std::vector<fe> row_values(std::size_t r) const;
    void append_row(const Matrix& o, std::size_t r = 0);
    void append_zero_row();
    void truncate_rows(std::size_t n);

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix& operator+=(const Matrix& o);
    Matrix scaled(fe s) const;
    Matrix transposed() const;
    Matrix power(unsigned e) const;
    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    fe trace() const;

    std::string str() const;

    // raw plane access: plane p of row r has words_per_row() words
    std::size_t words_per_row() const { return wpr_; }
    const std::uint64_t* plane(std::size_t r, int p) const { return d_.data() + (r * k_ + p) * wpr_; }
    std::uint64_t* plane(std::size_t r, int p) { return d_.data() + (r * k_ + p) * wpr_; }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    int k_ = 1;
    std::vector<std::uint64_t> d_;
};

struct RowReduction {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
    Matrix kernel;  // columns span the right kernel
    Matrix rref;
};

RowReduction row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
// nullopt means singular
std::optional<Matrix> invert(const Matrix& m);

// Subspace of F^n held as fully reduced rows: each row has a leading 1 at its
// pivot and zeros at every other row's pivot.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, std::size_t ambient) : rows_(f, 0, ambient) {}
    static Subspace span(const Matrix& rows);

    std::size_t ambient() const { return rows_.cols(); }
    std::size_t dim() const { return rows_.rows(); }
    const Field& field() const { return rows_.field(); }
    const Matrix& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return piv_; }

    // reduce row r of v modulo the subspace, in place
    void reduce(Matrix& v, std::size_t r = 0) const;
    bool contains(const Matrix& v, std::size_t r = 0) const;
    // returns true when the row enlarged the subspace
    bool insert(const Matrix& v, std::size_t r = 0);
    std::size_t insert_rows(const Matrix& m);
    // coordinates of a member vector in terms of rows()
    std::vector<fe> coords(const Matrix& v, std::size_t r = 0) const;

    Matrix canonical() const;  // rows sorted by pivot
    bool operator==(const Subspace& o) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // standard basis indices completing the subspace
    std::vector<std::size_t> complement() const;

private:
    Matrix rows_;
    std::vector<std::size_t> piv_;
};

}  // namespace rjd
