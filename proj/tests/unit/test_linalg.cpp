#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "pmonoid/errors.hpp"
#include "pmonoid/fixtures.hpp"
#include "pmonoid/matrix.hpp"
#include "pmonoid/subspace.hpp"

using namespace pmonoid;
using pmonoid::support::Gen;

namespace {

Subspace coords(std::size_t n, std::vector<std::size_t> idx) { return Subspace::coordinate(n, idx); }

}  // namespace

TEST(Matrix, RrefBasics) {
    EXPECT_EQ(rref(Matrix::identity(3)), Matrix::identity(3));
    EXPECT_EQ(rref(Matrix::zero(2, 3)), Matrix(0, 3));
    EXPECT_EQ(echelon(Matrix::zero(2, 3)).reduced, Matrix::zero(2, 3));
    const Matrix m{{2, 4}, {1, 2}};
    EXPECT_EQ(rref(m), (Matrix{{1, 2}}));
}

TEST(Matrix, DeterminantAndInverse) {
    const Matrix m{{2, 1}, {1, 1}};
    EXPECT_EQ(determinant(m), Scalar(1));
    EXPECT_EQ(inverse(m) * m, Matrix::identity(2));
    EXPECT_THROW(inverse(fixtures::order_dependence::A()), DivisionByZero);
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 50; ++trial) {
        const Matrix a = gen.matrix(4, 4);
        EXPECT_EQ(determinant(a), support::leibniz_det(a));
    }
}

TEST(Matrix, SolveRejectsInconsistentSystems) {
    const Matrix a{{1}, {0}};
    EXPECT_EQ(solve(a, Matrix{{3}, {0}}), (Matrix{{3}}));
    EXPECT_THROW(solve(a, Matrix{{0}, {1}}), DimensionMismatch);
}

TEST(Matrix, ShapeMismatchThrows) {
    EXPECT_THROW(Matrix::identity(2) * Matrix::identity(3), DimensionMismatch);
    EXPECT_THROW(Matrix::identity(2) + Matrix::identity(3), DimensionMismatch);
}

TEST(Matrix, RrefIdempotentAndRankNullity) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = gen.dim(1, 6);
        const std::size_t c = gen.dim(1, 6);
        const Matrix m = gen.coin() ? gen.matrix(r, c) : gen.matrix(r, 2) * gen.matrix(2, c);
        const Matrix once = rref(m);
        EXPECT_EQ(rref(once), once);
        const Subspace ker = kernel(m);
        EXPECT_EQ(rank(m) + ker.dim(), c);
        for (const auto& v : ker.basis_vectors()) EXPECT_TRUE(is_zero(m * v));
        EXPECT_EQ(image(m).dim(), rank(m));
    }
}

TEST(Subspace, KernelImageExamples) {
    EXPECT_EQ(kernel(fixtures::order_dependence::A()), coords(2, {1}));
    EXPECT_EQ(image(fixtures::order_dependence::B()), coords(2, {0}));
    EXPECT_TRUE(kernel(Matrix{{2, 1}, {1, 1}}).is_zero());
    EXPECT_TRUE(image(Matrix::identity(3)).is_full());
}

TEST(Subspace, LatticeOperations) {
    EXPECT_EQ(intersect(coords(3, {0, 1}), coords(3, {1, 2})), coords(3, {1}));
    const Subspace u = Subspace::span(3, std::vector<Vector>{{1, 1, 0}});
    EXPECT_EQ(sum(u, Subspace::zero(3)), u);
    EXPECT_TRUE(contains(coords(3, {0, 1}), u));
    EXPECT_FALSE(contains(coords(3, {0, 2}), u));
    EXPECT_THROW(intersect(coords(2, {0}), coords(3, {0})), DimensionMismatch);
    EXPECT_THROW(sum(coords(2, {0}), coords(3, {0})), DimensionMismatch);
}

TEST(Subspace, CanonicalOutputsAndModularLaw) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = gen.dim(1, 5);
        const Subspace a = gen.subspace(n, gen.dim(0, n));
        const Subspace b = gen.subspace(n, gen.dim(0, n));
        const Subspace c = gen.subspace(n, gen.dim(0, n));
        const Subspace cap = intersect(a, b);
        const Subspace cup = sum(a, b);
        EXPECT_EQ(rref(cap.basis()), cap.basis());
        EXPECT_EQ(rref(cup.basis()), cup.basis());
        EXPECT_EQ(cap.dim() + cup.dim(), a.dim() + b.dim());
        EXPECT_TRUE(contains(a, cap) && contains(b, cap));
        for (const auto& v : cap.basis_vectors()) EXPECT_TRUE(a.contains_vector(v) && b.contains_vector(v));
        // a ⊆ c implies a + (b ∩ c) = (a + b) ∩ c.
        const Subspace big = sum(a, c);
        EXPECT_EQ(sum(a, intersect(b, big)), intersect(sum(a, b), big));
    }
}

TEST(Subspace, CoordinatesRoundTrip) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = gen.dim(1, 5);
        const Subspace w = gen.subspace(n, gen.dim(1, n));
        const Vector c = gen.vector(w.dim());
        EXPECT_EQ(w.coordinates(w.combine(c)), c);
    }
    EXPECT_THROW(coords(2, {0}).coordinates(Vector{0, 1}), ContainmentViolation);
}

TEST(Subspace, Orthocomplement) {
    EXPECT_EQ(orthocomplement_in(coords(3, {1, 2}), Subspace::full(3)), coords(3, {0}));
    const Subspace u = Subspace::span(3, std::vector<Vector>{{1, 1, 0}});
    EXPECT_EQ(orthocomplement_in(Subspace::zero(3), u), u);
    EXPECT_THROW(orthocomplement_in(coords(3, {0}), coords(3, {1})), ContainmentViolation);
    // (1, i) is isotropic for the bilinear pairing; the Hermitian complement is (1, -i).
    const Subspace line = Subspace::span(2, std::vector<Vector>{{1, Scalar::i()}});
    const Subspace perp = orthocomplement_in(line, Subspace::full(2));
    EXPECT_EQ(perp, Subspace::span(2, std::vector<Vector>{{1, -Scalar::i()}}));
    EXPECT_TRUE(hermitian(perp.basis_vector(0), line.basis_vector(0)).is_zero());
}

TEST(Subspace, OrthocomplementOnRandomFlags) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = gen.dim(1, 5);
        const Subspace outer = gen.subspace(n, gen.dim(0, n));
        const Subspace inner = outer.is_zero() ? outer : intersect(outer, gen.subspace(n, gen.dim(0, n)));
        const Subspace perp = orthocomplement_in(inner, outer);
        EXPECT_EQ(perp.dim() + inner.dim(), outer.dim());
        EXPECT_TRUE(contains(outer, perp));
        for (const auto& x : perp.basis_vectors())
            for (const auto& y : inner.basis_vectors()) EXPECT_TRUE(hermitian(x, y).is_zero());
    }
}

TEST(Subspace, Restriction) {
    const Matrix expected{{1, 1}, {1, -1}, {1, -1}};
    EXPECT_EQ(restrict(fixtures::pencil3::A1(), coords(3, {1, 2})), expected);
    const Subspace w = Subspace::span(3, std::vector<Vector>{{1, 2, 0}, {0, 1, 1}});
    EXPECT_EQ(restrict(Matrix::identity(3), w), w.basis().transpose());
    EXPECT_THROW(restrict(Matrix::identity(2), w), DimensionMismatch);
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = gen.dim(1, 5);
        const Matrix m = gen.matrix(n, n);
        const Subspace sub = gen.subspace(n, gen.dim(1, n));
        const Matrix r = restrict(m, sub);
        for (std::size_t k = 0; k < sub.dim(); ++k) EXPECT_EQ(r.column(k), m * sub.basis_vector(k));
    }
}
