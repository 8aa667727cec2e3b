#include "pmonoid/hinge.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "pmonoid/errors.hpp"

namespace pmonoid {

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
    std::vector<std::size_t> idx(to - from);
    std::iota(idx.begin(), idx.end(), from);
    return idx;
}

// Projection of a subspace of V ⊕ V onto one copy.
Subspace project(const Subspace& s, bool target, std::size_t n) {
    if (s.is_zero()) return Subspace::zero(n);
    const auto rows = range(0, s.dim());
    const auto cols = target ? range(n, 2 * n) : range(0, n);
    return Subspace::row_span(s.basis().submatrix(rows, cols));
}

Vector concat(std::span<const Scalar> a, std::span<const Scalar> b) {
    Vector v(a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    return v;
}

// Ker(P) ⊕ Indef(P) as a subspace of V ⊕ V.
Subspace split_part(const LinearRelation& p) {
    const std::size_t n = p.n();
    std::vector<Vector> rows;
    const Vector zero(n);
    for (const auto& x : p.ker().basis_vectors()) rows.push_back(concat(x, zero));
    for (const auto& y : p.indef().basis_vectors()) rows.push_back(concat(zero, y));
    return Subspace::span(2 * n, rows);
}

}  // namespace

LinearRelation::LinearRelation(Subspace sub) : sub_(std::move(sub)) {
    if (sub_.ambient_dim() % 2 != 0) throw DimensionMismatch("relation ambient dimension must be even");
}

LinearRelation LinearRelation::graph(const Matrix& g) {
    if (!g.is_square()) throw DimensionMismatch("graph of a non-square matrix");
    return LinearRelation(Subspace::row_span(Matrix::identity(g.rows()).augment(g.transpose())));
}

LinearRelation LinearRelation::span(std::span<const Vector> sources, std::span<const Vector> targets) {
    if (sources.size() != targets.size() || sources.empty()) {
        throw DimensionMismatch("relation span needs matching, nonempty source and target lists");
    }
    const std::size_t n = sources.front().size();
    std::vector<Vector> rows;
    for (std::size_t k = 0; k < sources.size(); ++k) {
        if (sources[k].size() != n || targets[k].size() != n) throw DimensionMismatch("relation pair length mismatch");
        rows.push_back(concat(sources[k], targets[k]));
    }
    return LinearRelation(Subspace::span(2 * n, rows));
}

Subspace LinearRelation::dom() const { return project(sub_, false, n()); }

Subspace LinearRelation::im() const { return project(sub_, true, n()); }

Subspace LinearRelation::ker() const {
    const auto idx = range(0, n());
    return project(intersect(sub_, Subspace::coordinate(2 * n(), idx)), false, n());
}

Subspace LinearRelation::indef() const {
    const auto idx = range(n(), 2 * n());
    return project(intersect(sub_, Subspace::coordinate(2 * n(), idx)), true, n());
}

LinearRelation LinearRelation::scaled(const Scalar& c) const {
    Matrix b = sub_.basis();
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t k = n(); k < 2 * n(); ++k) b(r, k) *= c;
    return LinearRelation(Subspace::row_span(b));
}

bool LinearRelation::contains(std::span<const Scalar> source, std::span<const Scalar> target) const {
    return sub_.contains_vector(concat(source, target));
}

bool is_hinge(std::span<const LinearRelation> relations) {
    if (relations.empty()) return false;
    const std::size_t n = relations.front().n();
    for (const auto& p : relations) {
        if (p.n() != n || p.dim() != n) return false;
        if (p.subspace() == split_part(p)) return false;
    }
    if (!relations.front().dom().is_full() || !relations.back().im().is_full()) return false;
    for (std::size_t j = 0; j + 1 < relations.size(); ++j) {
        if (relations[j].ker() != relations[j + 1].dom()) return false;
        if (relations[j].im() != relations[j + 1].indef()) return false;
    }
    return true;
}

Hinge Hinge::make(std::vector<LinearRelation> relations) {
    if (!is_hinge(relations)) throw InvalidHinge("relations violate the hinge conditions");
    return Hinge(std::move(relations));
}

Subspace total_image(const MSeq& a) {
    Subspace s = Subspace::zero(a.n());
    for (const auto& m : a.maps()) s = sum(s, image(m));
    return s;
}

bool in_MH(const MSeq& a) { return total_image(a).is_full(); }

Hinge varphi(const MSeq& a) {
    if (!in_MH(a)) throw NotInMH("images of the terms do not span the whole space");
    const std::size_t n = a.n();
    const Vector zero(n);
    std::vector<LinearRelation> relations;
    Subspace earlier_images = Subspace::zero(n);
    for (std::size_t i = 0; i < a.length(); ++i) {
        const Subspace& domain = a.chain()[i];
        std::vector<Vector> rows;
        for (std::size_t k = 0; k < domain.dim(); ++k) {
            rows.push_back(concat(domain.basis_vector(k), a.map(i).column(k)));
        }
        for (const auto& y : earlier_images.basis_vectors()) rows.push_back(concat(zero, y));
        relations.emplace_back(Subspace::span(2 * n, rows));
        earlier_images = sum(earlier_images, image(a.map(i)));
    }
    return Hinge::make(std::move(relations));
}

MSeq hinge_to_MH(const Hinge& h) {
    const std::size_t n = h.n();
    const Vector zero(n);
    std::vector<Matrix> maps;
    Subspace previous_image = Subspace::zero(n);
    for (std::size_t i = 0; i < h.length(); ++i) {
        const LinearRelation& p = h[i];
        const Subspace complement = orthocomplement_in(previous_image, p.im());
        const Subspace domain = p.dom();
        std::vector<Vector> columns;
        for (const auto& x : domain.basis_vectors()) {
            std::vector<Vector> rows{concat(x, zero)};
            for (const auto& r : complement.basis_vectors()) rows.push_back(concat(zero, r));
            const Subspace solutions = intersect(p.subspace(), Subspace::span(2 * n, rows));
            if (solutions.dim() != 1) {
                throw InvalidHinge("relation " + std::to_string(i) + " has no unique section over its domain");
            }
            const Vector q = solutions.basis_vector(0);
            // q = (c x, c y); recover c from the pivot of x.
            std::size_t pivot = 0;
            while (x[pivot].is_zero()) ++pivot;
            const Scalar c = q[pivot] / x[pivot];
            if (c.is_zero()) throw InvalidHinge("relation " + std::to_string(i) + " is degenerate");
            columns.push_back(scale(std::span<const Scalar>(q).subspan(n), c.inverse()));
        }
        maps.push_back(Matrix::from_columns(n, columns));
        previous_image = p.im();
    }
    return MSeq::from_maps(n, std::move(maps));
}

bool hinge_equiv(const Hinge& a, const Hinge& b) {
    if (a.length() != b.length() || a.n() != b.n()) return false;
    const std::size_t n = a.n();
    for (std::size_t j = 0; j < a.length(); ++j) {
        const LinearRelation& p = a[j];
        const LinearRelation& q = b[j];
        if (p.dim() != q.dim()) return false;
        // Rows of `annihilator` vanish exactly on q.
        const Matrix annihilator = kernel(q.subspace().basis()).basis();
        std::optional<Scalar> factor;
        for (const auto& v : p.subspace().basis_vectors()) {
            Vector source(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
            Vector target(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
            const Vector fixed = annihilator * concat(source, Vector(n));
            const Vector moving = annihilator * concat(Vector(n), target);
            auto k = std::find_if(moving.begin(), moving.end(), [](const Scalar& s) { return !s.is_zero(); });
            if (k == moving.end()) {
                if (!is_zero(fixed)) return false;
                continue;
            }
            const auto at = static_cast<std::size_t>(k - moving.begin());
            factor = -fixed[at] / moving[at];
            break;
        }
        const Scalar c = factor.value_or(Scalar(1));
        if (c.is_zero() || p.scaled(c) != q) return false;
    }
    return true;
}

}  // namespace pmonoid
