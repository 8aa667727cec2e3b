#include "pmonoid/matrix.hpp"

#include <ostream>
#include <utility>

#include "pmonoid/errors.hpp"

namespace pmonoid {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("matrix entry count does not match its shape");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
    Matrix m(rows, cols);
    m(i, j) = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const { return pmonoid::is_zero(data_); }

const Scalar* Matrix::leading_entry() const {
    for (const auto& s : data_) {
        if (!s.is_zero()) return &s;
    }
    return nullptr;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conjugate() const {
    Matrix m = *this;
    for (auto& s : m.data_) s = s.conj();
    return m;
}

Matrix Matrix::stack(const Matrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw DimensionMismatch("stack: column counts differ");
    Matrix m(rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix Matrix::augment(const Matrix& right) const {
    if (rows_ != right.rows_) throw DimensionMismatch("augment: row counts differ");
    Matrix m(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
    }
    return m;
}

Matrix Matrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix m(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r)
        for (std::size_t c = 0; c < col_idx.size(); ++c) m(r, c) = (*this)(row_idx[r], col_idx[c]);
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
    for (auto& s : data_) s *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (!b(k, c).is_zero()) m(r, c) += x * b(k, c);
            }
        }
    }
    return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t c = 0; c < a.cols_; ++c) {
            if (!a(r, c).is_zero() && !v[c].is_zero()) out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

Echelon echelon(Matrix m) {
    Echelon out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != lead) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
        }
        const Scalar inv = m(lead, c).inverse();
        for (std::size_t k = c; k < cols; ++k) m(lead, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            const Scalar factor = m(r, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (!m(lead, k).is_zero()) m(r, k) -= factor * m(lead, k);
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.reduced = std::move(m);
    return out;
}

Matrix rref(const Matrix& m) {
    Echelon e = echelon(m);
    Matrix out(e.pivots.size(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = e.reduced(r, c);
    return out;
}

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Scalar det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero()) ++p;
        if (p == n) return Scalar{};
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
            det = -det;
        }
        det *= a(c, c);
        const Scalar inv = a(c, c).inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero()) continue;
            const Scalar factor = a(r, c) * inv;
            for (std::size_t k = c; k < n; ++k) a(r, k) -= factor * a(c, k);
        }
    }
    return det;
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Echelon e = echelon(m.augment(Matrix::identity(n)));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DivisionByZero("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    const std::size_t n = a.cols();
    Echelon e = echelon(a.augment(b));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
        throw DimensionMismatch("solve: coefficient matrix lacks full column rank");
    }
    if (e.pivots.size() > n) throw DimensionMismatch("solve: right-hand side outside the column span");
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, n + c);
    return x;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Vector scale(std::span<const Scalar> v, const Scalar& c) {
    Vector out(v.begin(), v.end());
    for (auto& s : out) s *= c;
    return out;
}

Scalar hermitian(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw DimensionMismatch("hermitian form length mismatch");
    Scalar acc;
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k] * y[k].conj();
    return acc;
}

}  // namespace pmonoid
