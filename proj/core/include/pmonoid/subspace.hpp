#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmonoid/matrix.hpp"

namespace pmonoid {

/// Subspace of Q(i)^d held by its canonical basis: the nonzero rows of the
/// reduced row-echelon form of any spanning set. Equal subspaces therefore
/// compare structurally equal.
///
/// The canonical basis is also the ordered basis used whenever a map is
/// restricted to the subspace (see `restrict`).
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient) { return Subspace(ambient, Matrix(0, ambient)); }
    static Subspace full(std::size_t ambient) { return Subspace(ambient, Matrix::identity(ambient)); }
    /// Span of the rows of `rows`.
    static Subspace row_span(const Matrix& rows);
    static Subspace span(std::size_t ambient, std::span<const Vector> vectors);
    /// Span of e_i for the listed coordinate indices.
    static Subspace coordinate(std::size_t ambient, std::span<const std::size_t> indices);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Basis vectors as rows, in reduced row-echelon form.
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t k) const { return basis_.row(k); }
    std::vector<Vector> basis_vectors() const;

    bool contains_vector(std::span<const Scalar> v) const;
    /// Coordinates of v with respect to the canonical basis. Throws
    /// ContainmentViolation when v is not in the subspace.
    Vector coordinates(std::span<const Scalar> v) const;
    /// Vector with the given coordinates in the canonical basis.
    Vector combine(std::span<const Scalar> coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    Subspace(std::size_t ambient, Matrix canonical) : ambient_(ambient), basis_(std::move(canonical)) {}

    std::size_t ambient_ = 0;
    Matrix basis_;
};

/// {x : m x = 0}.
Subspace kernel(const Matrix& m);
/// Column span of m.
Subspace image(const Matrix& m);
/// Kernel of a map given by its matrix with respect to `domain`'s canonical
/// basis, re-embedded in the ambient space of `domain`.
Subspace kernel_on(const Matrix& restricted, const Subspace& domain);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// True iff v is a subspace of u.
bool contains(const Subspace& u, const Subspace& v);

/// The complement W' of `inner` in `outer` that is orthogonal to `inner` under
/// the standard Hermitian form. Throws ContainmentViolation unless inner is a
/// subspace of outer.
Subspace orthocomplement_in(const Subspace& inner, const Subspace& outer);

/// Matrix of m restricted to w: column k is m applied to w's k-th canonical
/// basis vector.
Matrix restrict(const Matrix& m, const Subspace& w);

/// Applies a map given relative to `domain`'s canonical basis to a vector of
/// the ambient space lying in `domain`.
Vector apply_on(const Matrix& restricted, const Subspace& domain, std::span<const Scalar> v);

/// Matrix (dim w) x ambient sending x to the coordinates of the orthogonal
/// projection of x onto w.
Matrix orthogonal_projection_coords(const Subspace& w);

}  // namespace pmonoid
