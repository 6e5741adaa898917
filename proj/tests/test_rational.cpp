#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fdspec/rational.hpp"

using fdspec::BigInt;
using fdspec::Rational;

TEST(Rational, StoredReduced) {
    Rational r(BigInt(4), BigInt(-6));
    EXPECT_EQ(r.numerator(), -2);
    EXPECT_EQ(r.denominator(), 3);
    EXPECT_EQ(r.str(), "-2/3");
    EXPECT_EQ(Rational(BigInt(10), BigInt(5)).str(), "2");
}

TEST(Rational, ZeroDenominatorRejected) {
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), fdspec::InvalidParameter);
    EXPECT_THROW(Rational(1) / Rational(0), fdspec::InvalidParameter);
    EXPECT_THROW(Rational(0).reciprocal(), fdspec::InvalidParameter);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("-3/2"), Rational(BigInt(-3), BigInt(2)));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
    for (const char* bad : {"", "1.5", "1/", "/2", "1/-2", "1/0", "abc", "-"})
        EXPECT_THROW(Rational::parse(bad), fdspec::ParseError) << bad;
}

TEST(Rational, StringRoundTripProperty) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000'000L, 1'000'000'000L);
    std::uniform_int_distribution<long> den(1, 1'000'000'000L);
    for (int i = 0; i < 500; ++i) {
        BigInt big_num = BigInt(num(rng)) * num(rng) * num(rng);
        Rational r(big_num, BigInt(den(rng)));
        EXPECT_EQ(Rational::parse(r.str()), r);
    }
}

// Division of two exactly representable integers is correctly rounded by IEEE
// hardware, which makes it an independent reference for to_floating.
TEST(Rational, ToDoubleMatchesHardwareDivision) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-(1L << 52), 1L << 52);
    std::uniform_int_distribution<long> den(1, 1L << 52);
    for (int i = 0; i < 20000; ++i) {
        const long p = num(rng), q = den(rng);
        EXPECT_EQ(Rational(BigInt(p), BigInt(q)).to_floating<double>(),
                  static_cast<double>(p) / static_cast<double>(q))
            << p << "/" << q;
    }
}

TEST(Rational, ToLongDoubleMatchesHardwareDivision) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long> num(-(1L << 62), 1L << 62);
    std::uniform_int_distribution<long> den(1, 1L << 62);
    for (int i = 0; i < 20000; ++i) {
        const long p = num(rng), q = den(rng);
        EXPECT_EQ(Rational(BigInt(p), BigInt(q)).to_floating<long double>(),
                  static_cast<long double>(p) / static_cast<long double>(q));
    }
}

TEST(Rational, TiesRoundToEven) {
    const BigInt two53 = BigInt(1) << 53;
    EXPECT_EQ(Rational(two53 + 1).to_floating<double>(), std::ldexp(1.0, 53));
    EXPECT_EQ(Rational(two53 + 3).to_floating<double>(), std::ldexp(1.0, 53) + 4.0);
    EXPECT_EQ(Rational(-(two53 + 1)).to_floating<double>(), -std::ldexp(1.0, 53));
}

TEST(Rational, HugeValuesConvert) {
    const BigInt big = fdspec::factorial(100);
    const double v = Rational(big, BigInt(3)).to_floating<double>();
    EXPECT_NEAR(v / (9.33262154439441e157 / 3.0), 1.0, 1e-14);
    EXPECT_EQ(Rational(0).to_floating<double>(), 0.0);
}

TEST(Rational, CombinatoricHelpers) {
    EXPECT_EQ(fdspec::factorial(0), 1);
    EXPECT_EQ(fdspec::factorial(5), 120);
    EXPECT_EQ(fdspec::binomial(6, 3), 20);
    EXPECT_EQ(fdspec::harmonic(4), Rational(BigInt(25), BigInt(12)));
    EXPECT_EQ(fdspec::pow(Rational(0), 0), Rational(1));
    EXPECT_EQ(fdspec::pow(Rational(BigInt(-2), BigInt(3)), 3), Rational(BigInt(-8), BigInt(27)));
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)));
    EXPECT_GT(Rational(-1), Rational(-2));
    EXPECT_EQ((Rational(BigInt(1), BigInt(6)) + Rational(BigInt(1), BigInt(3))).str(), "1/2");
}
