#include "pmonoid/exterior.hpp"

#include <string>

#include "pmonoid/errors.hpp"
#include "pmonoid/hinge.hpp"

namespace pmonoid {

namespace {

void require_degree(std::size_t n, std::size_t k) {
    if (k < 1 || k > n) {
        throw DegreeOutOfRange("degree " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

std::vector<std::vector<std::size_t>> wedge_basis(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        // Advance the rightmost index that still has room.
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

WedgeMap compound(const Matrix& m, std::size_t k) {
    if (!m.is_square()) throw DimensionMismatch("compound of a non-square matrix");
    const std::size_t n = m.rows();
    require_degree(n, k);
    const auto basis = wedge_basis(n, k);
    Matrix out(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) out(r, c) = determinant(m.submatrix(basis[r], basis[c]));
    return {n, k, std::move(out)};
}

WedgeMap wedge_seq(const MSeq& a, std::size_t k) {
    const std::size_t n = a.n();
    require_degree(n, k);

    // Adapted basis: the canonical bases of V'_0, V'_1, ... concatenated.
    std::vector<Vector> adapted;
    std::vector<Vector> images;
    std::vector<std::size_t> block_end;
    for (std::size_t i = 0; i < a.length(); ++i) {
        const Subspace piece = orthocomplement_in(a.chain()[i + 1], a.chain()[i]);
        for (const auto& f : piece.basis_vectors()) {
            images.push_back(a.apply(i, f));
            adapted.push_back(f);
        }
        block_end.push_back(adapted.size());
    }
    const Matrix change = Matrix::from_columns(n, adapted);
    const Matrix change_inv = inverse(change);
    const Matrix block_sum = Matrix::from_columns(n, images) * change_inv;

    // Degree k lands in block j: all of blocks 0..j-1 plus part of block j.
    std::size_t j = 0;
    while (block_end[j] < k) ++j;
    const std::size_t before = j == 0 ? 0 : block_end[j - 1];

    const auto basis = wedge_basis(n, k);
    Matrix selector(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        const auto& set = basis[r];
        bool selected = true;
        for (std::size_t p = 0; p < k; ++p) {
            // Lexicographic sets: the first `before` entries must be 0..before-1
            // and the remaining ones must lie inside block j.
            if (p < before ? set[p] != p : (set[p] < before || set[p] >= block_end[j])) {
                selected = false;
                break;
            }
        }
        if (selected) selector(r, r) = 1;
    }
    const Matrix projection = compound(change, k).matrix * selector * compound(change_inv, k).matrix;
    return {n, k, compound(block_sum, k).matrix * projection};
}

Scalar det_seq(const MSeq& a) { return wedge_seq(a, a.n()).matrix(0, 0); }

LambdaVector lambda(const MSeq& a) {
    LambdaVector out;
    for (std::size_t k = 1; k <= a.n(); ++k) out.components.push_back(wedge_seq(a, k));
    return out;
}

LambdaVector lambda_bar(const PMSeq& a) {
    if (!in_MH(a.seq())) throw NotInMH("λ̄ is defined only when the term images span the space");
    LambdaVector out;
    for (std::size_t k = 1; k < a.n(); ++k) {
        WedgeMap w = wedge_seq(a.seq(), k);
        w.matrix = normalize_leading(w.matrix);
        out.components.push_back(std::move(w));
    }
    return out;
}

LambdaVector compose(const LambdaVector& x, const LambdaVector& y) {
    if (x.components.size() != y.components.size()) throw DimensionMismatch("compose: degree ranges differ");
    LambdaVector out;
    for (std::size_t i = 0; i < x.components.size(); ++i) {
        const auto& a = x.components[i];
        const auto& b = y.components[i];
        if (a.n != b.n || a.k != b.k) throw DimensionMismatch("compose: component shapes differ");
        out.components.push_back({a.n, a.k, a.matrix * b.matrix});
    }
    return out;
}

}  // namespace pmonoid
