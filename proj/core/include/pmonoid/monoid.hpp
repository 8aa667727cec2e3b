#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "pmonoid/matrix.hpp"
#include "pmonoid/subspace.hpp"

namespace pmonoid {

/// Sequence (A_0, ..., A_{l-1}) of n x n matrices whose kernels intersect in
/// zero. This is the set on which the raw product is defined.
class RawSeq {
public:
    /// Validates squareness, equal sizes and the zero common kernel. Throws
    /// DimensionMismatch, InvalidSequence (empty list) or CommonKernelNonzero.
    static RawSeq make(std::vector<Matrix> terms);
    static RawSeq single(Matrix g) { return make({std::move(g)}); }

    std::size_t n() const { return n_; }
    std::size_t length() const { return terms_.size(); }
    const std::vector<Matrix>& terms() const { return terms_; }
    const Matrix& operator[](std::size_t i) const { return terms_[i]; }

    /// Running intersections K_i = Ker(A_0) ∩ ... ∩ Ker(A_i).
    std::vector<Subspace> running_kernels() const;

    friend bool operator==(const RawSeq&, const RawSeq&) = default;

private:
    RawSeq(std::size_t n, std::vector<Matrix> terms) : n_(n), terms_(std::move(terms)) {}

    std::size_t n_ = 0;
    std::vector<Matrix> terms_;
};

/// Kernel-chain sequence: maps A_i : V_i -> V on the strictly decreasing
/// chain V = V_0 ⊋ V_1 ⊋ ... ⊋ V_{m+1} = 0 with V_{i+1} = Ker(A_i).
///
/// maps()[i] is n x dim(V_i), written against V_i's canonical basis.
class MSeq {
public:
    /// Builds the chain from the maps (V_{i+1} = kernel of maps[i] on V_i)
    /// and validates every invariant. Throws InvalidSequence on violation.
    static MSeq from_maps(std::size_t n, std::vector<Matrix> maps);
    /// Validates a chain/maps pair as given.
    static MSeq make(std::size_t n, std::vector<Subspace> chain, std::vector<Matrix> maps);
    static MSeq single(const Matrix& g) { return from_maps(g.rows(), {g}); }

    std::size_t n() const { return n_; }
    /// Number of terms, m + 1.
    std::size_t length() const { return maps_.size(); }
    /// V_0, ..., V_{m+1}.
    const std::vector<Subspace>& chain() const { return chain_; }
    const std::vector<Matrix>& maps() const { return maps_; }
    const Matrix& map(std::size_t i) const { return maps_[i]; }
    std::vector<std::size_t> chain_dims() const;

    /// A_i extended to V by zero on the Hermitian complement of V_i.
    Matrix zero_extension(std::size_t i) const;
    /// Image of a vector of V_i under A_i.
    Vector apply(std::size_t i, std::span<const Scalar> x) const;

    friend bool operator==(const MSeq&, const MSeq&) = default;

private:
    MSeq(std::size_t n, std::vector<Subspace> chain, std::vector<Matrix> maps)
        : n_(n), chain_(std::move(chain)), maps_(std::move(maps)) {}

    std::size_t n_ = 0;
    std::vector<Subspace> chain_;
    std::vector<Matrix> maps_;
};

/// Projective class of an MSeq, stored as the representative whose maps have
/// first nonzero entry (row-major) equal to 1. Equality is structural.
class PMSeq {
public:
    PMSeq() = default;

    std::size_t n() const { return seq_.n(); }
    std::size_t length() const { return seq_.length(); }
    const MSeq& seq() const { return seq_; }
    const std::vector<Subspace>& chain() const { return seq_.chain(); }
    const std::vector<Matrix>& maps() const { return seq_.maps(); }

    friend bool operator==(const PMSeq&, const PMSeq&) = default;
    friend PMSeq projectivize(const MSeq& a);

private:
    explicit PMSeq(MSeq seq) : seq_(std::move(seq)) {}

    MSeq seq_ = MSeq::single(Matrix::identity(1));
};

/// Rescales m so its first nonzero entry is 1; the zero matrix is returned as is.
Matrix normalize_leading(const Matrix& m);

/// Subsequence keeping exactly the terms at which the running kernel
/// intersection strictly drops.
RawSeq psi(const RawSeq& a);
/// psi, then each kept term restricted to the preceding running kernel.
MSeq pi(const RawSeq& a);
/// Term l*j + i of the result is A_i B_j, where a has l terms.
RawSeq mul_raw(const RawSeq& a, const RawSeq& b);
PMSeq projectivize(const MSeq& a);

/// Lifts an MSeq to full endomorphisms by zero extension on each V_i's
/// Hermitian complement; pi(lift(a)) == a.
RawSeq lift(const MSeq& a);

/// Product in M: pi(mul_raw(lift(a), lift(b))).
MSeq mul(const MSeq& a, const MSeq& b);
/// Product in the projective monoid.
PMSeq mul(const PMSeq& a, const PMSeq& b);

/// A way of extending A_i : V_i -> V to an endomorphism of V. Used to check
/// that the product does not depend on the extension.
using LiftStrategy = std::function<Matrix(const MSeq&, std::size_t)>;
PMSeq mul_with_lift(const PMSeq& a, const PMSeq& b, const LiftStrategy& lift_term);

/// True iff a is a single term of full rank, i.e. lies in PGL(V).
bool is_invertible(const PMSeq& a);

}  // namespace pmonoid
