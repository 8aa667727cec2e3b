#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "pmonoid/action.hpp"
#include "pmonoid/errors.hpp"
#include "pmonoid/fixtures.hpp"

using namespace pmonoid;
using pmonoid::support::Gen;

namespace {

namespace fx = pmonoid::fixtures;

PMSeq ppi(std::vector<Matrix> terms) { return projectivize(pi(RawSeq::make(std::move(terms)))); }

}  // namespace

TEST(ProjPoint, Canonical) {
    EXPECT_EQ(ProjPoint({0, 2, 4}).coords(), (Vector{0, 1, 2}));
    EXPECT_EQ(ProjPoint({Scalar::i(), 1}), ProjPoint({1, -Scalar::i()}));
    EXPECT_THROW(ProjPoint({0, 0}), InvalidSequence);
}

TEST(Phi, OrderDependenceExample) {
    using namespace fx::order_dependence;
    const PMSeq ab = ppi({A(), B()});
    const PMSeq ba = ppi({B(), A()});
    EXPECT_EQ(phi_apply(ab, ProjPoint({0, 1})), ProjPoint({1, 0}));
    std::vector<ProjPoint> pts{ProjPoint({1, 0}), ProjPoint({0, 1}), ProjPoint({1, 1}), ProjPoint({1, Scalar::i()})};
    Gen gen(support::default_seed());
    while (pts.size() < 54) pts.push_back(gen.point(2));
    EXPECT_TRUE(maps_equal_on(ab, ba, pts));
    EXPECT_TRUE(maps_equal_on(ab, ab, pts));
}

TEST(Phi, IdentityAndDistinctMaps) {
    Gen gen(support::default_seed());
    const PMSeq id = projectivize(MSeq::single(Matrix::identity(3)));
    for (int k = 0; k < 20; ++k) {
        const ProjPoint x = gen.point(3);
        EXPECT_EQ(phi_apply(id, x), x);
    }
    const std::vector<Scalar> d{1, 2};
    const std::vector<ProjPoint> one{ProjPoint({1, 1})};
    EXPECT_FALSE(maps_equal_on(projectivize(MSeq::single(Matrix::identity(2))),
                               projectivize(MSeq::single(Matrix::diagonal(d))), one));
}

TEST(Phi, DimensionMismatchThrows) {
    const PMSeq id = projectivize(MSeq::single(Matrix::identity(3)));
    EXPECT_THROW(phi_apply(id, ProjPoint({1, 0})), DimensionMismatch);
}

TEST(Phi, Homomorphism) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const PMSeq a = gen.pmseq(n);
        const PMSeq b = gen.pmseq(n);
        const PMSeq ab = mul(a, b);
        for (int k = 0; k < 20; ++k) {
            const ProjPoint x = gen.point(n);
            ASSERT_EQ(phi_apply(ab, x), phi_apply(a, phi_apply(b, x))) << "trial " << trial;
        }
    }
}

TEST(Phi, StratumIsUnique) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const MSeq a = gen.mseq(n);
        for (std::size_t i = 0; i < a.length(); ++i) {
            const Vector x = gen.vector_in_stratum(a.chain()[i], a.chain()[i + 1]);
            EXPECT_EQ(stratum_index(a, x), i);
            EXPECT_EQ(support::stratum_by_containment(a.chain(), x), i);
        }
    }
}

TEST(Phi, DependsOnlyOnClasses) {
    Gen gen(support::default_seed());
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const MSeq a = gen.mseq(n);
        std::vector<Matrix> scaled;
        for (const auto& m : a.maps()) scaled.push_back(m * gen.nonzero_scalar());
        const MSeq a2 = MSeq::make(n, a.chain(), scaled);
        const Vector x = gen.nonzero_vector(n);
        const Scalar c = gen.nonzero_scalar();
        const ProjPoint expected = ProjPoint(a.apply(stratum_index(a, x), x));
        EXPECT_EQ(phi_apply(projectivize(a), ProjPoint(x)), expected);
        EXPECT_EQ(phi_apply(projectivize(a2), ProjPoint(scale(x, c))), expected);
    }
}
