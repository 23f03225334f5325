#include <random>

#include <gtest/gtest.h>

#include "mvlab/bigfloat.hpp"
#include "mvlab/error.hpp"
#include "mvlab/funceq.hpp"
#include "mvlab/gaussian.hpp"
#include "mvlab/laurent.hpp"
#include "mvlab/rational.hpp"

using namespace mvlab;

namespace {

LaurentT random_laurent(std::mt19937& rng)
{
    std::uniform_int_distribution<int> exp(-30, 30);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 40);
    std::uniform_int_distribution<int> len(0, 6);
    LaurentT p;
    for (int i = len(rng); i > 0; --i) {
        p.add_term(exp(rng), make_rat(num(rng), den(rng)));
    }
    return p;
}

} // namespace

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(to_fraction_string(make_rat(6, -4)), "-3/2");
    EXPECT_EQ(to_fraction_string(make_rat(0, 7)), "0/1");
    EXPECT_EQ(to_fraction_string(BigRat(3)), "3/1");
    EXPECT_THROW(make_rat(1, 0), domain_error);
}

TEST(Rational, ParseFractionIsStrict)
{
    EXPECT_EQ(parse_fraction("29/640"), make_rat(29, 640));
    EXPECT_EQ(parse_fraction("-3/2"), make_rat(-3, 2));
    EXPECT_EQ(parse_fraction("0/1"), BigRat(0));
    for (const char* bad : {"2/4", "1/0", "1/-2", "-0/1", "01/2", "1/02", "3", "", "1/2/3", " 1/2", "1.5/2", "+1/2"}) {
        EXPECT_THROW(parse_fraction(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, RoundTripThroughString)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-1000000, 1000000);
    for (int i = 0; i < 200; ++i) {
        long den = d(rng);
        if (den == 0) {
            den = 1;
        }
        const BigRat r = make_rat(d(rng), den);
        EXPECT_EQ(parse_fraction(to_fraction_string(r)), r);
    }
}

TEST(Bernoulli, Examples)
{
    EXPECT_EQ(bernoulli(0), BigRat(1));
    EXPECT_EQ(bernoulli(1), make_rat(-1, 2));
    EXPECT_EQ(bernoulli(2), make_rat(1, 6));
    EXPECT_EQ(bernoulli(12), make_rat(-691, 2730));
    EXPECT_EQ(bernoulli(3), BigRat(0));
}

TEST(Bernoulli, DefiningRecurrenceUpTo40)
{
    for (unsigned m = 1; m <= 40; ++m) {
        BigRat s = 0;
        for (unsigned k = 0; k <= m; ++k) {
            s += BigRat(binomial(m + 1, k)) * bernoulli(k);
        }
        EXPECT_EQ(s, BigRat(0)) << "m = " << m;
    }
}

TEST(Combinatorics, PochhammerExamples)
{
    EXPECT_EQ(pochhammer(make_rat(5, 2), 1), make_rat(5, 2));
    EXPECT_EQ(pochhammer(make_rat(-7, 3), 0), BigRat(1));
    EXPECT_EQ(pochhammer(make_rat(3, 2), 3), make_rat(105, 8));
}

TEST(Combinatorics, DoubleFactorial)
{
    EXPECT_EQ(double_factorial(7), BigRat(105));
    EXPECT_EQ(double_factorial(8), BigRat(384));
    EXPECT_EQ(double_factorial(0), BigRat(1));
    EXPECT_EQ(double_factorial(-1), BigRat(1));
    EXPECT_EQ(double_factorial(-3), BigRat(-1));
    EXPECT_EQ(double_factorial(-5), make_rat(1, 3));
    EXPECT_THROW(double_factorial(-2), domain_error);
}

TEST(Laurent, DerivativeExamples)
{
    LaurentT one_minus_T(BigRat(1));
    one_minus_T.add_term(1, BigRat(-1));
    EXPECT_EQ(laurent_dt(one_minus_T, 1), LaurentT::monomial(-1));
    EXPECT_EQ(laurent_dt(LaurentT::monomial(-4), 1), LaurentT::monomial(-6, 4));
    EXPECT_EQ(laurent_dt(LaurentT::monomial(-4), 2), LaurentT::monomial(-8, 24));
    EXPECT_EQ(laurent_dt(LaurentT::monomial(3, 5), 0), LaurentT::monomial(3, 5));
}

TEST(Laurent, NoStoredZeros)
{
    LaurentT p = LaurentT::monomial(2, 3);
    p.add_term(2, BigRat(-3));
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p, LaurentT());
    const LaurentT q = LaurentT::monomial(1) - LaurentT::monomial(1);
    EXPECT_EQ(q.size(), 0u);
}

TEST(Laurent, CommutativeRingLaws)
{
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentT p = random_laurent(rng);
        const LaurentT q = random_laurent(rng);
        const LaurentT r = random_laurent(rng);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * q, q * p);
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p - p, LaurentT());
    }
}

TEST(Laurent, LeibnizRule)
{
    std::mt19937 rng(999);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentT p = random_laurent(rng);
        const LaurentT q = random_laurent(rng);
        EXPECT_EQ(laurent_dt(p * q, 1), laurent_dt(p, 1) * q + p * laurent_dt(q, 1));
    }
}

TEST(Laurent, XInT)
{
    // x = (1 - T^2)/2 so d/dx x = 1.
    EXPECT_EQ(laurent_dt(x_in_T(), 1), LaurentT(BigRat(1)));
    EXPECT_EQ(x_in_T().at_one(), BigRat(0));
}

TEST(Laurent, LogDerivative)
{
    GenusBlock h;
    h.log_coeff = make_rat(1, 24);
    EXPECT_EQ(derivative(h), LaurentT::monomial(-2, make_rat(1, 24)));
}

TEST(Gaussian, ConjugationIsInvolutionAndNormIsReal)
{
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> d(-100, 100);
    for (int i = 0; i < 100; ++i) {
        const GaussianRat z(make_rat(d(rng), 7), make_rat(d(rng), 11));
        EXPECT_EQ(z.conj().conj(), z);
        EXPECT_TRUE((z * z.conj()).is_real());
        const GaussianRat w(make_rat(d(rng), 3), make_rat(d(rng), 5));
        EXPECT_EQ((z * w).conj(), z.conj() * w.conj());
    }
}

TEST(Gaussian, ImaginaryPower)
{
    EXPECT_EQ(imaginary_power(make_rat(1, 2), 0), GaussianRat(BigRat(1)));
    EXPECT_EQ(imaginary_power(make_rat(1, 2), 1), GaussianRat(BigRat(0), make_rat(1, 2)));
    EXPECT_EQ(imaginary_power(make_rat(1, 2), 2), GaussianRat(make_rat(-1, 4)));
    EXPECT_EQ(imaginary_power(make_rat(-1, 2), 3), GaussianRat(BigRat(0), make_rat(1, 8)));
}

TEST(Gaussian, OppositeShiftsOfRealSeriesAreConjugate)
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> d(-20, 20);
    BiSeries f(6, -2, 4);
    for (int a = 0; a <= 6; ++a) {
        for (int b = -2; b <= 4; ++b) {
            f.set(a, b, GaussianRat(make_rat(d(rng), 1 + (a + b + 10) % 7)));
        }
    }
    const BiSeries p = f.shift_x(1);
    const BiSeries m = f.shift_x(-1);
    int compared = 0;
    for (int a = 0; a <= 6; ++a) {
        for (int b = -2; b <= 4; ++b) {
            ASSERT_EQ(p.known(a, b), m.known(a, b));
            if (p.known(a, b)) {
                EXPECT_EQ(p.coeff(a, b), m.coeff(a, b).conj());
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 0);
}

TEST(BigFloat, RationalRoundTripAt256Bits)
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> d(1, 1000000000);
    const BigFloat eps = pow(BigFloat(2, 256), -250);
    for (int i = 0; i < 200; ++i) {
        BigRat r = make_rat(d(rng), d(rng));
        r *= BigRat(pow_int(10, i % 40));
        if (i % 3 == 0) {
            r = -r;
        }
        const BigFloat f(r, 256);
        const BigRat back = f.to_rational();
        const BigRat rel = abs(back - r) / abs(r);
        EXPECT_LT(BigFloat(rel, 256), eps);
    }
}

TEST(BigFloat, PrecisionIsExplicit)
{
    EXPECT_THROW(BigFloat(32), domain_error);
    const BigFloat a(1, 128);
    const BigFloat b(3, 256);
    EXPECT_EQ((a / b).precision(), 256);
    EXPECT_EQ(BigFloat::pi(320).to_string(20), "3.1415926535897932385e+00");
    EXPECT_EQ(BigFloat(make_rat(1, 3), 64).with_precision(200).precision(), 200);
}

TEST(BigFloat, Comparisons)
{
    const BigFloat a(make_rat(1, 3), 200);
    const BigFloat b(make_rat(1, 2), 200);
    EXPECT_TRUE(a < b);
    EXPECT_TRUE(b > a);
    EXPECT_EQ(abs(-a), a);
    EXPECT_EQ(max(a, b), b);
    EXPECT_EQ((-a).sign(), -1);
}
