#include <random>

#include <gtest/gtest.h>

#include <qsteinberg/algebraic.hpp>

using namespace qsteinberg;

TEST(AlgValue, MakeCanonicalizes)
{
    auto v = AlgValue::make(0, 1, 2, 2);
    EXPECT_EQ(v.a(), 0);
    EXPECT_EQ(v.b(), -1);
    EXPECT_EQ(v.e(), 0);
    EXPECT_EQ(v.m(), 2);
    EXPECT_EQ(v.str(), "-√2");

    auto two = AlgValue::make(0, 1, 0, 4);
    EXPECT_TRUE(two.is_rational());
    EXPECT_EQ(two, AlgValue(2));

    auto golden = AlgValue::make(Rational(1, 2), Rational(1, 2), 0, 5);
    EXPECT_EQ(golden.str(), "(1 + √5)/2");

    auto i_sqrt3 = AlgValue::make(0, 1, 1, 12); // i * sqrt(12) = 2i sqrt(3)
    EXPECT_EQ(i_sqrt3.b(), 2);
    EXPECT_EQ(i_sqrt3.m(), 3);
    EXPECT_EQ(i_sqrt3.e(), 1);
    EXPECT_EQ(AlgValue::make(0, 1, -1, 1).str(), "-i");
    EXPECT_EQ(AlgValue::make(0, 0, 1, 7), AlgValue(0));
    EXPECT_THROW(AlgValue::make(0, 1, 0, 0), DomainError);
}

TEST(AlgValue, Arithmetic)
{
    auto x = AlgValue(Rational(1, 2)) + AlgValue::make(0, Rational(1, 2), 1, 3);
    EXPECT_EQ(x.str(), "(1 + i√3)/2");
    EXPECT_FALSE(x.is_zero());
    EXPECT_TRUE((x + (-x)).is_zero());
    EXPECT_EQ(AlgValue::make(0, 1, 0, 5).scaled(Rational(1, 2)).str(), "√5/2");
    EXPECT_THROW(AlgValue::make(0, 1, 0, 5) + AlgValue::make(0, 1, 0, 3), IncompatibleRadicals);
    EXPECT_THROW(AlgValue::make(0, 1, 0, 5) + AlgValue::make(0, 1, 1, 5), IncompatibleRadicals);

    // (1 + sqrt5)/2 squared is (3 + sqrt5)/2
    auto g = AlgValue::make(Rational(1, 2), Rational(1, 2), 0, 5);
    EXPECT_EQ(g * g, AlgValue::make(Rational(3, 2), Rational(1, 2), 0, 5));
    // a cube root of unity has modulus one
    EXPECT_EQ(x * x.conj(), AlgValue(1));
    EXPECT_EQ(AlgValue::make(0, 1, 1, 2) * AlgValue::make(0, 1, 1, 2), AlgValue(-2));
    EXPECT_EQ(AlgValue::make(0, 1, 0, 2) * AlgValue::make(0, 1, 0, 3), AlgValue::make(0, 1, 0, 6));
}

namespace {

AlgValue random_value(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long long> coeff(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 50);
    std::uniform_int_distribution<int> e(0, 3);
    std::uniform_int_distribution<long long> m(1, 10000);
    std::bernoulli_distribution zero_a(0.1), zero_b(0.2);
    Rational a = zero_a(rng) ? Rational(0) : Rational(coeff(rng), den(rng));
    Rational b = zero_b(rng) ? Rational(0) : Rational(coeff(rng), den(rng));
    return AlgValue::make(a, b, e(rng), m(rng));
}

} // namespace

TEST(AlgValue, CanonicalFormIsIdempotent)
{
    std::mt19937_64 rng(20240607);
    for (int k = 0; k < 1000; ++k) {
        auto v = random_value(rng);
        EXPECT_EQ(AlgValue::make(v.a(), v.b(), v.e(), v.m()), v);
        if (v.b() == 0) {
            EXPECT_EQ(v.e(), 0);
            EXPECT_EQ(v.m(), 1);
        }
    }
}

TEST(AlgValue, ZeroTestAgreesWithFloatingWitness)
{
    std::mt19937_64 rng(77);
    int zeros = 0;
    for (int k = 0; k < 1000; ++k) {
        AlgValue v = random_value(rng);
        // force a share of exact cancellations
        if (k % 5 == 0)
            v = v - v;
        else if (k % 7 == 0)
            v = AlgValue::make(-v.b() * 3, v.b(), 0, 9);
        EXPECT_EQ(v.is_zero(), v.approx_abs() < 1e-6) << v;
        zeros += v.is_zero();
    }
    EXPECT_GT(zeros, 100);
}

TEST(AlgValue, AdditionCommutesAndAssociates)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> c(-1000, 1000);
    for (int k = 0; k < 300; ++k) {
        // compatible triple: shared radical
        const long long m = 1 + k % 30;
        const int e = k % 2;
        AlgValue x = AlgValue::make(Rational(c(rng), 7), c(rng), e, m);
        AlgValue y = AlgValue::make(c(rng), Rational(c(rng), 3), e, m);
        AlgValue z = AlgValue(Rational(c(rng), 11));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ((x + y) + z, x + (y + z));
    }
}
