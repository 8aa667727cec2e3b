#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pmonoid/monoid.hpp"

namespace pmonoid {

/// Linear relation V ⇉ V: a subspace of V ⊕ V. Coordinates 0..n-1 are the
/// source copy, n..2n-1 the target copy.
class LinearRelation {
public:
    /// Throws DimensionMismatch when the ambient dimension is odd.
    explicit LinearRelation(Subspace sub);

    /// {(x, g x)}.
    static LinearRelation graph(const Matrix& g);
    /// Span of the pairs (sources[k], targets[k]).
    static LinearRelation span(std::span<const Vector> sources, std::span<const Vector> targets);

    std::size_t n() const { return sub_.ambient_dim() / 2; }
    std::size_t dim() const { return sub_.dim(); }
    const Subspace& subspace() const { return sub_; }

    Subspace dom() const;
    Subspace im() const;
    /// Sources x with (x, 0) in the relation.
    Subspace ker() const;
    /// Targets y with (0, y) in the relation.
    Subspace indef() const;

    /// {(x, c y) : (x, y) in the relation}.
    LinearRelation scaled(const Scalar& c) const;
    bool contains(std::span<const Scalar> source, std::span<const Scalar> target) const;

    friend bool operator==(const LinearRelation&, const LinearRelation&) = default;

private:
    Subspace sub_;
};

/// Sequence of n-dimensional relations satisfying the hinge conditions.
class Hinge {
public:
    /// Throws InvalidHinge unless is_hinge(relations).
    static Hinge make(std::vector<LinearRelation> relations);

    std::size_t n() const { return relations_.front().n(); }
    std::size_t length() const { return relations_.size(); }
    const std::vector<LinearRelation>& relations() const { return relations_; }
    const LinearRelation& operator[](std::size_t j) const { return relations_[j]; }

    friend bool operator==(const Hinge&, const Hinge&) = default;

private:
    explicit Hinge(std::vector<LinearRelation> relations) : relations_(std::move(relations)) {}

    std::vector<LinearRelation> relations_;
};

/// All five hinge conditions: dimensions n, Ker(P_j) = Dom(P_{j+1}),
/// Im(P_j) = Indef(P_{j+1}), Dom(P_0) = V, Im(P_m) = V, and no P_j equal to
/// Ker(P_j) ⊕ Indef(P_j).
bool is_hinge(std::span<const LinearRelation> relations);

/// Σ_i Im(A_i) (each A_i on its own domain V_i).
Subspace total_image(const MSeq& a);
/// True iff the images of the terms together span V.
bool in_MH(const MSeq& a);

/// P_i = {(x, A_i x) : x in V_i} + (0 ⊕ Σ_{k<i} Im(A_k)). Throws NotInMH.
Hinge varphi(const MSeq& a);

/// Inverse construction: A_i sends x in Dom(P_i) to the unique y in R_i with
/// (x, y) in P_i, where R_i is the Hermitian complement of Im(P_{i-1}) in
/// Im(P_i).
MSeq hinge_to_MH(const Hinge& h);

/// Equality up to rescaling each relation's target by a nonzero constant.
bool hinge_equiv(const Hinge& a, const Hinge& b);

}  // namespace pmonoid
