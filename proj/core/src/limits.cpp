#include "pmonoid/limits.hpp"

#include <string>

#include "pmonoid/errors.hpp"

namespace pmonoid {

EpsFamily EpsFamily::make(std::vector<Matrix> coeffs) {
    if (coeffs.empty()) throw InvalidSequence("family has no coefficients");
    const std::size_t n = coeffs.front().rows();
    bool any_nonzero = false;
    for (const auto& c : coeffs) {
        if (c.rows() != n || c.cols() != n) throw DimensionMismatch("family coefficients must all be n x n");
        any_nonzero = any_nonzero || !c.is_zero();
    }
    if (!any_nonzero) throw InvalidSequence("family is identically zero");
    return EpsFamily(n, std::move(coeffs));
}

EpsFamily EpsFamily::scaled(const Scalar& c) const {
    std::vector<Matrix> out = coeffs_;
    for (auto& m : out) m *= c;
    return make(std::move(out));
}

EpsFamily EpsFamily::shifted(std::size_t k) const {
    std::vector<Matrix> out(k, Matrix::zero(n_, n_));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return EpsFamily(n_, std::move(out));
}

EpsFamily operator*(const EpsFamily& f, const EpsFamily& g) {
    if (f.n_ != g.n_) throw DimensionMismatch("family product: dimensions differ");
    std::vector<Matrix> out(f.coeffs_.size() + g.coeffs_.size() - 1, Matrix::zero(f.n_, f.n_));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    return EpsFamily::make(std::move(out));
}

LimitExpansion limit_expansion(const EpsFamily& f) {
    const std::size_t n = f.n();
    std::vector<Subspace> chain{Subspace::full(n)};
    std::vector<Matrix> maps;
    std::vector<std::size_t> orders;
    while (!chain.back().is_zero()) {
        const Subspace& w = chain.back();
        bool found = false;
        for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
            Matrix restricted = restrict(f.coeffs()[k], w);
            if (restricted.is_zero()) continue;
            Subspace next = kernel_on(restricted, w);
            maps.push_back(std::move(restricted));
            orders.push_back(k);
            chain.push_back(std::move(next));
            found = true;
            break;
        }
        if (!found) {
            throw NotConvergent("every coefficient vanishes on a subspace of dimension " + std::to_string(w.dim()));
        }
    }
    return {MSeq::make(n, std::move(chain), std::move(maps)), std::move(orders)};
}

PMSeq limit(const EpsFamily& f) { return projectivize(limit_expansion(f).seq); }

Matrix eval(const EpsFamily& f, const Scalar& t) {
    const auto& c = f.coeffs();
    Matrix acc = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * t + c[k];
    return acc;
}

}  // namespace pmonoid
