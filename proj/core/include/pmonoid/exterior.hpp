#pragma once

// Wedge powers. The basis of ∧^k V is e_I = e_{i_1} ∧ ... ∧ e_{i_k} for index
// sets I = {i_1 < ... < i_k} in lexicographic order, so entry (I, J) of the
// k-th compound of A is the minor det A[I, J].

#include <cstddef>
#include <vector>

#include "pmonoid/monoid.hpp"

namespace pmonoid {

/// Increasing k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k);
std::size_t binomial(std::size_t n, std::size_t k);

/// Endomorphism of ∧^k V written in the lexicographic wedge basis.
struct WedgeMap {
    std::size_t n = 0;
    std::size_t k = 0;
    Matrix matrix;

    friend bool operator==(const WedgeMap&, const WedgeMap&) = default;
};

/// (∧^1 A, ..., ∧^K A); K = n for λ and n - 1 for λ̄.
struct LambdaVector {
    std::vector<WedgeMap> components;

    friend bool operator==(const LambdaVector&, const LambdaVector&) = default;
};

/// k-th compound matrix. Throws DegreeOutOfRange unless 1 <= k <= n.
WedgeMap compound(const Matrix& m, std::size_t k);

/// ∧^k of a kernel-chain sequence. With V'_i the Hermitian complement of
/// V_{i+1} in V_i, r_i = dim V'_i, and j chosen by
/// r_0 + ... + r_{j-1} < k <= r_0 + ... + r_j, this is ∧^k(⊕ A_i|V'_i)
/// composed with the projection of ∧^k V onto
/// ∧^{r_0}V'_0 ⊗ ... ⊗ ∧^{k - r_0 - ... - r_{j-1}}V'_j
/// along the other summands of the decomposition induced by V = ⊕ V'_i.
WedgeMap wedge_seq(const MSeq& a, std::size_t k);

/// Scalar by which ∧^n acts.
Scalar det_seq(const MSeq& a);

LambdaVector lambda(const MSeq& a);

/// Components 1..n-1 of λ, each rescaled so its first nonzero entry is 1.
/// Throws NotInMH.
LambdaVector lambda_bar(const PMSeq& a);

/// Componentwise composition (x ∘ y per degree).
LambdaVector compose(const LambdaVector& x, const LambdaVector& y);

}  // namespace pmonoid
