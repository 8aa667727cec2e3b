#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "oracle.hpp"
#include "pmonoid/errors.hpp"
#include "pmonoid/exterior.hpp"
#include "pmonoid/fixtures.hpp"
#include "pmonoid/hinge.hpp"
#include "pmonoid/limits.hpp"

using namespace pmonoid;
using pmonoid::support::Gen;

namespace {

namespace fx = pmonoid::fixtures;

MSeq mpi(std::vector<Matrix> terms) { return pi(RawSeq::make(std::move(terms))); }

// det of [A_i applied to a basis of V'_i] over det of that basis.
Scalar det_by_adapted_basis(const MSeq& a) {
    const std::size_t n = a.n();
    std::vector<Vector> basis;
    std::vector<Vector> images;
    for (std::size_t i = 0; i < a.length(); ++i) {
        const Subspace piece = orthocomplement_in(a.chain()[i + 1], a.chain()[i]);
        for (const auto& f : piece.basis_vectors()) {
            basis.push_back(f);
            images.push_back(a.apply(i, f));
        }
    }
    return support::leibniz_det(Matrix::from_columns(n, images)) / support::leibniz_det(Matrix::from_columns(n, basis));
}

MSeq random_any(Gen& gen, std::size_t n, int trial) {
    switch (trial % 3) {
        case 0: return gen.mh(n);
        case 1: return gen.degenerate(n);
        default: return gen.mseq(n);
    }
}

}  // namespace

TEST(Compound, Basics) {
    EXPECT_EQ(binomial(4, 2), 6u);
    EXPECT_EQ(wedge_basis(3, 2), (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(compound(Matrix::identity(4), k).matrix, Matrix::identity(binomial(4, k)));
    const std::vector<Scalar> d{2, 3, 5};
    const std::vector<Scalar> d2{6, 10, 15};
    EXPECT_EQ(compound(Matrix::diagonal(d), 2).matrix, Matrix::diagonal(d2));
    EXPECT_THROW(compound(Matrix::identity(3), 0), DegreeOutOfRange);
    EXPECT_THROW(compound(Matrix::identity(3), 4), DegreeOutOfRange);
}

TEST(Compound, AgreesWithMinors) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = gen.dim(1, 4);
        const Matrix m = gen.matrix(n, n);
        for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(compound(m, k).matrix, support::compound_by_minors(m, k));
    }
}

TEST(Compound, CauchyBinet) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = gen.dim(1, 4);
        const Matrix a = gen.matrix(n, n);
        const Matrix b = gen.matrix(n, n);
        for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
            EXPECT_EQ(compound(a * b, k).matrix, compound(a, k).matrix * compound(b, k).matrix);
        }
    }
}

TEST(WedgeSeq, FinalExample) {
    using namespace fx::wedge4;
    const WedgeMap w = wedge_seq(mpi({A0(), A1()}), 3);
    const std::vector<Scalar> diag{1, 1, 0, 0};
    EXPECT_EQ(w.matrix, Matrix::diagonal(diag));
    EXPECT_EQ(w.matrix * w.matrix, w.matrix);
    EXPECT_THROW(wedge_seq(mpi({A0(), A1()}), 5), DegreeOutOfRange);
}

TEST(WedgeSeq, SingleTermIsCompound) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = gen.dim(1, 4);
        const Matrix g = gen.invertible(n);
        for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(wedge_seq(MSeq::single(g), k), compound(g, k));
        EXPECT_EQ(det_seq(MSeq::single(g)), determinant(g));
    }
}

TEST(DetSeq, Examples) {
    using namespace fx::hinge_limit;
    const MSeq in = mpi({A0(), A2()});
    EXPECT_EQ(det_seq(in), det_by_adapted_basis(in));
    EXPECT_EQ(det_seq(in), Scalar(1));
    EXPECT_TRUE(det_seq(mpi({A0(), A1()})).is_zero());
}

TEST(DetSeq, NonzeroExactlyOnMH) {
    std::vector<MSeq> cases{mpi({fx::hinge_limit::A0(), fx::hinge_limit::A2()}),
                            mpi({fx::hinge_limit::A0(), fx::hinge_limit::A1()}),
                            mpi({fx::order_dependence::A(), fx::order_dependence::B()}),
                            mpi({fx::order_dependence::B(), fx::order_dependence::A()}),
                            mpi({fx::mh_not_closed::A0(), fx::mh_not_closed::A1()}),
                            mpi({fx::mh_not_closed::B0(), fx::mh_not_closed::B1()}),
                            mpi({fx::discontinuity::A0(), fx::discontinuity::A1()}),
                            mpi({fx::discontinuity::B0(), fx::discontinuity::B1()}),
                            mpi({fx::wedge4::A0(), fx::wedge4::A1()})};
    cases.push_back(mul(cases[5], cases[4]));
    cases.push_back(limit(EpsFamily::make({fx::pencil3::A0(), fx::pencil3::A1()})).seq());
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 200; ++trial) cases.push_back(random_any(gen, gen.dim(2, 4), trial));
    for (const auto& a : cases) {
        const Scalar d = det_seq(a);
        EXPECT_EQ(!d.is_zero(), in_MH(a));
        EXPECT_EQ(d, det_by_adapted_basis(a));
    }
}

TEST(Lambda, Basics) {
    const LambdaVector l = lambda(MSeq::single(Matrix::identity(3)));
    ASSERT_EQ(l.components.size(), 3u);
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(l.components[k - 1].matrix, Matrix::identity(binomial(3, k)));
    const Matrix g{{2, 4}, {1, 3}};
    const LambdaVector lb = lambda_bar(projectivize(MSeq::single(g)));
    ASSERT_EQ(lb.components.size(), 1u);
    EXPECT_EQ(lb.components[0].matrix, normalize_leading(g));
    EXPECT_THROW(lambda_bar(projectivize(mpi({fx::hinge_limit::A0(), fx::hinge_limit::A1()}))), NotInMH);
}

TEST(Lambda, NotMultiplicativeOutsideMH) {
    using namespace fx::mh_not_closed;
    const MSeq a = mpi({A0(), A1()});
    const MSeq b = mpi({B0(), B1()});
    EXPECT_NE(lambda(mul(b, a)), compose(lambda(b), lambda(a)));
}

TEST(Lambda, MultiplicativeAgainstUnitsOnMH) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = gen.dim(2, 4);
        const MSeq a = gen.mh(n);
        const MSeq g = MSeq::single(gen.invertible(n));
        const MSeq h = MSeq::single(gen.coin() ? gen.unitary(n) : gen.invertible(n));
        EXPECT_EQ(lambda(mul(mul(g, a), h)), compose(compose(lambda(g), lambda(a)), lambda(h))) << "trial " << trial;
    }
}

TEST(LambdaBar, ContinuityAlongFamilies) {
    Gen gen(support::default_seed());
    std::vector<EpsFamily> families{EpsFamily::make({fx::wedge4::A0(), fx::wedge4::A1()}),
                                    EpsFamily::make({fx::hinge_limit::A0(), fx::hinge_limit::A2()})};
    while (families.size() < 22) {
        EpsFamily f = gen.convergent_family(gen.dim(2, 4));
        if (in_MH(limit(f).seq())) families.push_back(std::move(f));
    }
    for (const auto& f : families) {
        const LambdaVector target = lambda_bar(limit(f));
        for (std::size_t k = 1; k < f.n(); ++k) {
            double prev = 2.0;
            for (unsigned e = 3; e <= 5; ++e) {
                const Matrix c = compound(eval(f, support::power_of_ten_inverse(e)), k).matrix;
                const double d = support::matrix_gap(c, target.components[k - 1].matrix);
                EXPECT_LE(d, std::max(prev, 1e-12)) << "k " << k << " eps 1e-" << e;
                prev = d;
            }
            EXPECT_LT(prev, 1e-2);
        }
    }
}

TEST(LambdaBar, MHIsOpenAlongPerturbedFamilies) {
    Gen gen(support::default_seed());
    const std::vector<EpsFamily> examples{EpsFamily::make({fx::wedge4::A0(), fx::wedge4::A1()}),
                                          EpsFamily::make({fx::hinge_limit::A0(), fx::hinge_limit::A2()})};
    const Scalar delta(1, 1000);
    for (const auto& f : examples) {
        ASSERT_TRUE(in_MH(limit(f).seq()));
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<Matrix> coeffs;
            for (const auto& c : f.coeffs()) coeffs.push_back(c + delta * gen.matrix(f.n(), f.n()));
            const PMSeq lim = limit(EpsFamily::make(coeffs));
            EXPECT_TRUE(in_MH(lim.seq()));
            EXPECT_NO_THROW(lambda_bar(lim));
        }
    }
}
