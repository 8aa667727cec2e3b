#include <gtest/gtest.h>

#include "generators.hpp"
#include "pmonoid/errors.hpp"
#include "pmonoid/scalar.hpp"

using pmonoid::Scalar;

namespace {

Scalar s(const char* text) { return Scalar::parse(text); }

}  // namespace

TEST(Scalar, Arithmetic) {
    const Scalar i = Scalar::i();
    EXPECT_EQ((1 + i) * (1 - i), Scalar(2));
    EXPECT_EQ(s("3/7-2i") * Scalar(1), s("3/7-2i"));
    EXPECT_EQ(s("1/2+1/3i") + s("1/2-1/3i"), Scalar(1));
    EXPECT_EQ(Scalar(1) / i, -i);
    EXPECT_EQ(s("2+2i") / (1 + i), Scalar(2));
    EXPECT_EQ(i * i, Scalar(-1));
}

TEST(Scalar, Conjugation) {
    EXPECT_EQ(s("1+i").conj(), s("1-i"));
    EXPECT_EQ(Scalar(3, 5).conj(), Scalar(3, 5));
    EXPECT_EQ(s("-2/3+5/4i").conj().conj(), s("-2/3+5/4i"));
    EXPECT_EQ(s("3+4i").norm(), mpq_class(25));
}

TEST(Scalar, DivisionByZeroThrows) {
    EXPECT_THROW(Scalar(1) / Scalar(0), pmonoid::DivisionByZero);
    EXPECT_THROW(Scalar(0).inverse(), pmonoid::DivisionByZero);
}

TEST(Scalar, CanonicalForm) {
    EXPECT_EQ(Scalar(mpq_class(2, 4), mpq_class(-3, -6)), Scalar(mpq_class(1, 2), mpq_class(1, 2)));
    EXPECT_EQ(Scalar(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Scalar(mpq_class(2, 4), mpq_class(-3, -6)).to_string(), "1/2+1/2i");
}

TEST(Scalar, ParseAndPrint) {
    EXPECT_EQ(s("1/2+3/4i"), Scalar(mpq_class(1, 2), mpq_class(3, 4)));
    EXPECT_EQ(s("-2i"), Scalar(mpq_class(0), mpq_class(-2)));
    EXPECT_EQ(s("5"), Scalar(5));
    EXPECT_EQ(s("i"), Scalar::i());
    EXPECT_EQ(s("-i"), -Scalar::i());
    EXPECT_EQ(s("1/2-i"), Scalar(mpq_class(1, 2), mpq_class(-1)));
    EXPECT_EQ(s(" 7/3 "), Scalar(7, 3));
    for (const char* text : {"0", "1", "-1", "i", "-i", "1/2+3/4i", "-2i", "5", "-7/3-1/9i", "2+i"}) {
        EXPECT_EQ(s(text).to_string(), text);
    }
}

TEST(Scalar, ParseRejectsMalformed) {
    for (const char* text : {"", "abc", "1/0", "1+", "1+2", "2ii", "1/2/3", "+", "i+i"}) {
        EXPECT_THROW(s(text), pmonoid::FormatError) << text;
    }
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
    pmonoid::support::Gen gen(pmonoid::support::default_seed());
    for (int trial = 0; trial < 500; ++trial) {
        const Scalar a = gen.scalar();
        const Scalar b = gen.scalar();
        const Scalar c = gen.scalar();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, Scalar(0));
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        if (!b.is_zero()) {
            EXPECT_EQ((a * b) / b, a);
            EXPECT_EQ(b * b.inverse(), Scalar(1));
        }
        EXPECT_EQ(Scalar::parse(a.to_string()), a);
    }
}

TEST(Scalar, HashAgreesWithEquality) {
    EXPECT_EQ(std::hash<Scalar>{}(s("2/4+i")), std::hash<Scalar>{}(Scalar(mpq_class(1, 2), mpq_class(1))));
}
