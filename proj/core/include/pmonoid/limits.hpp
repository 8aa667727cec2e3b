#pragma once

#include <cstddef>
#include <vector>

#include "pmonoid/monoid.hpp"

namespace pmonoid {

/// Polynomial family f(ε) = Σ_k coeffs[k] ε^k of n x n matrices.
class EpsFamily {
public:
    /// Throws DimensionMismatch on non-square or unequal coefficients and
    /// InvalidSequence when every coefficient is zero.
    static EpsFamily make(std::vector<Matrix> coeffs);

    std::size_t n() const { return n_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Matrix>& coeffs() const { return coeffs_; }

    /// Family with every coefficient multiplied by c.
    EpsFamily scaled(const Scalar& c) const;
    /// ε^k f(ε).
    EpsFamily shifted(std::size_t k) const;
    /// Pointwise product f(ε) g(ε).
    friend EpsFamily operator*(const EpsFamily& f, const EpsFamily& g);

    friend bool operator==(const EpsFamily&, const EpsFamily&) = default;

private:
    EpsFamily(std::size_t n, std::vector<Matrix> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

    std::size_t n_ = 0;
    std::vector<Matrix> coeffs_;
};

/// The limit as an unnormalized sequence together with the ε-order selected
/// for each term.
struct LimitExpansion {
    MSeq seq;
    std::vector<std::size_t> orders;
};

/// Repeatedly restricts the family to the current subspace W (starting at V),
/// emits the lowest-order nonvanishing coefficient there and continues on its
/// kernel inside W. Throws NotConvergent when a nonzero W is annihilated by
/// every coefficient.
LimitExpansion limit_expansion(const EpsFamily& f);

/// lim_{ε→0} of the class of f(ε) in the projective monoid.
PMSeq limit(const EpsFamily& f);

/// f(t), by Horner's rule.
Matrix eval(const EpsFamily& f, const Scalar& t);

}  // namespace pmonoid
