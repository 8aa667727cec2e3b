#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "pmonoid/scalar.hpp"

namespace pmonoid {

/// Column vector over the Gaussian rationals.
using Vector = std::vector<Scalar>;

/// Dense row-major matrix over the Gaussian rationals.
///
/// Vectors are columns: `m * v` applies the map. Subspace bases elsewhere are
/// stored as the rows of a matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
    /// Row-list literal, mainly for fixtures: {{1, 0}, {0, 1}}.
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const Scalar> diag);
    /// Matrix whose columns are the given vectors, each of length `rows`.
    static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
    static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
    /// Unit matrix E_ij (one at row i, column j).
    static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Scalar> entries() const { return data_; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    bool is_zero() const;
    /// First nonzero entry scanning row-major, or nullptr for the zero matrix.
    const Scalar* leading_entry() const;

    Matrix transpose() const;
    Matrix conjugate() const;
    Matrix adjoint() const { return conjugate().transpose(); }

    /// Rows [0, rows) of this stacked over rows of `below`.
    Matrix stack(const Matrix& below) const;
    /// Columns of this followed by columns of `right`.
    Matrix augment(const Matrix& right) const;
    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Result of Gauss-Jordan elimination.
struct Echelon {
    Matrix reduced;                    ///< reduced row-echelon form, zero rows kept at the bottom
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

Echelon echelon(Matrix m);
/// Reduced row-echelon form with zero rows removed.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
/// Inverse of a square matrix; throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);
/// Solves a * x = b for a with full column rank. Throws DimensionMismatch when
/// b is not in the column span of a.
Matrix solve(const Matrix& a, const Matrix& b);

bool is_zero(std::span<const Scalar> v);
Vector scale(std::span<const Scalar> v, const Scalar& c);
/// Standard Hermitian form sum_k x_k * conj(y_k).
Scalar hermitian(std::span<const Scalar> x, std::span<const Scalar> y);

}  // namespace pmonoid
