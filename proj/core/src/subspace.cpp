#include "pmonoid/subspace.hpp"

#include "pmonoid/errors.hpp"

namespace pmonoid {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& v, const char* op) {
    if (u.ambient_dim() != v.ambient_dim()) {
        throw DimensionMismatch(std::string(op) + ": ambient dimensions differ");
    }
}

// Rows spanning {y : y . x = 0 for all x in u} under the bilinear pairing.
Matrix annihilator(const Subspace& u) {
    if (u.is_zero()) return Matrix::identity(u.ambient_dim());
    return kernel(u.basis()).basis();
}

}  // namespace

Subspace Subspace::row_span(const Matrix& rows) { return Subspace(rows.cols(), rref(rows)); }

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
    return row_span(Matrix::from_rows(ambient, vectors));
}

Subspace Subspace::coordinate(std::size_t ambient, std::span<const std::size_t> indices) {
    Matrix m(indices.size(), ambient);
    for (std::size_t k = 0; k < indices.size(); ++k) m(k, indices[k]) = 1;
    return row_span(m);
}

std::vector<Vector> Subspace::basis_vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) out.push_back(basis_.row(k));
    return out;
}

bool Subspace::contains_vector(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    if (pmonoid::is_zero(v)) return true;
    Matrix one(1, ambient_, Vector(v.begin(), v.end()));
    return rank(basis_.stack(one)) == dim();
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    // In RREF each basis row has a unit pivot, so coordinates are read off the
    // pivot columns and then verified.
    Vector coords(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        std::size_t c = 0;
        while (basis_(r, c).is_zero()) ++c;
        coords[r] = v[c];
    }
    if (combine(coords) != Vector(v.begin(), v.end())) {
        throw ContainmentViolation("vector does not lie in the subspace");
    }
    return coords;
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
    if (coords.size() != dim()) throw DimensionMismatch("coordinate count differs from dimension");
    Vector out(ambient_);
    for (std::size_t r = 0; r < dim(); ++r) {
        if (coords[r].is_zero()) continue;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (!basis_(r, c).is_zero()) out[c] += coords[r] * basis_(r, c);
        }
    }
    return out;
}

Subspace kernel(const Matrix& m) {
    const std::size_t cols = m.cols();
    Echelon e = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(cols, vectors);
}

Subspace image(const Matrix& m) { return Subspace::row_span(m.transpose()); }

Subspace kernel_on(const Matrix& restricted, const Subspace& domain) {
    if (restricted.cols() != domain.dim()) throw DimensionMismatch("restricted map does not match its domain");
    const Subspace coords = kernel(restricted);
    std::vector<Vector> vectors;
    vectors.reserve(coords.dim());
    for (std::size_t k = 0; k < coords.dim(); ++k) vectors.push_back(domain.combine(coords.basis_vector(k)));
    return Subspace::span(domain.ambient_dim(), vectors);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "intersect");
    if (u.is_zero() || v.is_zero()) return Subspace::zero(u.ambient_dim());
    if (u.is_full()) return v;
    if (v.is_full()) return u;
    return kernel(annihilator(u).stack(annihilator(v)));
}

Subspace sum(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "sum");
    return Subspace::row_span(u.basis().stack(v.basis()));
}

bool contains(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "contains");
    if (v.dim() > u.dim()) return false;
    return sum(u, v).dim() == u.dim();
}

Subspace orthocomplement_in(const Subspace& inner, const Subspace& outer) {
    require_same_ambient(inner, outer, "orthocomplement_in");
    if (!contains(outer, inner)) throw ContainmentViolation("inner subspace is not contained in outer");
    if (inner.is_zero()) return outer;
    return intersect(kernel(inner.basis().conjugate()), outer);
}

Matrix restrict(const Matrix& m, const Subspace& w) {
    if (m.cols() != w.ambient_dim()) throw DimensionMismatch("restrict: map and subspace disagree on dimension");
    if (w.is_zero()) return Matrix(m.rows(), 0);
    return m * w.basis().transpose();
}

Vector apply_on(const Matrix& restricted, const Subspace& domain, std::span<const Scalar> v) {
    return restricted * domain.coordinates(v);
}

Matrix orthogonal_projection_coords(const Subspace& w) {
    if (w.is_zero()) return Matrix(0, w.ambient_dim());
    // c = G^{-1} conj(B) x with Gram matrix G = conj(B) B^T.
    const Matrix bc = w.basis().conjugate();
    const Matrix gram = bc * w.basis().transpose();
    return inverse(gram) * bc;
}

}  // namespace pmonoid
