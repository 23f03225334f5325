#include <random>

#include <gtest/gtest.h>

#include "mvlab/asymptotics.hpp"
#include "mvlab/error.hpp"

using namespace mvlab;

namespace {

constexpr long bits = 320;

std::vector<AsymSample> synthetic(const std::vector<BigRat>& c, int g_lo, int g_hi)
{
    std::vector<AsymSample> s;
    for (int g = g_lo; g <= g_hi; ++g) {
        BigRat v = 0;
        BigRat p = 1;
        for (const auto& ck : c) {
            v += ck * p;
            p /= g;
        }
        s.emplace_back(g, BigFloat(v, bits));
    }
    return s;
}

double rel(const BigFloat& a, const BigFloat& b)
{
    return (abs(a - b) / abs(b)).to_double();
}

} // namespace

TEST(NormalizeVol, Examples)
{
    const BigFloat r = normalize_vol(2, 0, make_rat(1, 96), bits);
    EXPECT_NEAR(r.to_double(), 0.995455, 5e-6);
    // 1/96 * 4! 3^4 pi^7 / (5! 2^9)
    const BigFloat direct = BigFloat(make_rat(1944, 96 * 120 * 512), bits) * pow(BigFloat::pi(bits), 7);
    EXPECT_LT(rel(r, direct), 1e-90);
    EXPECT_GT(normalize_vol(1, 1, make_rat(1, 12), bits).sign(), 0);
    EXPECT_THROW(normalize_vol(0, 3, BigRat(1), bits), domain_error);
    EXPECT_THROW(normalize_vol(2, 0, make_rat(1, 96), 32), domain_error);
}

TEST(RichardsonFit, SyntheticQuadratic)
{
    const AsymFit f = richardson_fit(synthetic({BigRat(1), BigRat(1), BigRat(2)}, 10, 40), 2);
    ASSERT_EQ(f.coefficients.size(), 3u);
    EXPECT_LT(rel(f.coefficients[0], BigFloat(1, bits)), 1e-20);
    EXPECT_LT(rel(f.coefficients[1], BigFloat(1, bits)), 1e-20);
    EXPECT_LT(rel(f.coefficients[2], BigFloat(2, bits)), 1e-20);
    EXPECT_EQ(f.g_hi, 40);
    EXPECT_EQ(f.g_lo, 38);
    EXPECT_LT(rel(f.least_squares[2], BigFloat(2, bits)), 1e-20);
}

TEST(RichardsonFit, ConstantSeries)
{
    const AsymFit f = richardson_fit(synthetic({BigRat(7)}, 10, 30), 3);
    EXPECT_LT(rel(f.coefficients[0], BigFloat(7, bits)), 1e-40);
    for (int k = 1; k <= 3; ++k) {
        EXPECT_LE(abs(f.coefficients[k]), f.error_estimates[k]) << k;
    }
    for (const auto& e : f.error_estimates) {
        EXPECT_GE(e.sign(), 0);
    }
}

TEST(RichardsonFit, SquareBranchInterpolates)
{
    const int K = 3;
    std::vector<AsymSample> s;
    for (int g = 10; g < 10 + K + 2; ++g) {
        s.emplace_back(g, BigFloat(make_rat(g * g + 3, g + 1), bits));
    }
    const AsymFit f = richardson_fit(s, K);
    for (std::size_t i = 1; i < s.size(); ++i) {
        BigFloat v(0, bits);
        BigFloat p(1, bits);
        for (int k = 0; k <= K; ++k) {
            v += f.coefficients[k] * p;
            p /= BigFloat(s[i].first, bits);
        }
        EXPECT_LT(abs(v - s[i].second).to_double(), 1e-80);
    }
}

TEST(RichardsonFit, RandomRationalSeries)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-999, 999);
    std::uniform_int_distribution<int> den(1, 997);
    for (int K = 0; K <= 6; ++K) {
        std::vector<BigRat> c;
        for (int k = 0; k <= K; ++k) {
            int p = num(rng);
            c.push_back(make_rat(p == 0 ? 1 : p, den(rng)));
        }
        const AsymFit f = richardson_fit(synthetic(c, 20, 60), K);
        for (int k = 0; k <= K; ++k) {
            EXPECT_LT(rel(f.coefficients[k], BigFloat(c[k], bits)), 1e-15) << K << "," << k;
        }
    }
}

TEST(RichardsonFit, Preconditions)
{
    EXPECT_THROW(richardson_fit(synthetic({BigRat(1)}, 10, 13), 3), domain_error);
    auto s = synthetic({BigRat(1)}, 10, 20);
    s.push_back(s.front());
    EXPECT_THROW(richardson_fit(s, 2), domain_error);
    EXPECT_THROW(richardson_fit(synthetic({BigRat(1)}, 10, 20), -1), domain_error);
}

TEST(EstimateM, Genus60Order5)
{
    const AsymFit f = estimate_m(0, 60, 5, bits);
    EXPECT_LT(abs(f.coefficients[0] - BigFloat(1, bits)).to_double(), 1e-8);
    EXPECT_LT(rel(f.coefficients[1], constant_M(bits)), 1e-6);
    EXPECT_THROW(estimate_m(0, 19, 5, bits), domain_error);
}

TEST(EstimateC, Genus60Order5)
{
    const AsymFit f = estimate_C(0, 60, 5, bits);
    EXPECT_LT(abs(f.coefficients[0] - BigFloat(make_rat(1, 4), bits)).to_double(), 1e-8);
}

TEST(EstimateM, WindowStability)
{
    for (int n : {0, 2}) {
        const AsymFit a = estimate_m(n, 60, 5, bits);
        const AsymFit b = estimate_m(n, 55, 5, bits);
        for (int k = 0; k <= 5; ++k) {
            EXPECT_LE(abs(a.coefficients[k] - b.coefficients[k]), BigFloat(10, bits) * a.error_estimates[k]) << n << "," << k;
        }
    }
}

TEST(EstimateM, PrecisionIsNotTheBottleneck)
{
    const AsymFit a = estimate_m(1, 60, 5, bits);
    const AsymFit b = estimate_m(1, 60, 5, 2 * bits);
    for (int k = 0; k <= 5; ++k) {
        EXPECT_LT(abs(a.coefficients[k] - b.coefficients[k].with_precision(bits)), a.error_estimates[k]) << k;
    }
}

TEST(EstimateM, SecondCoefficientIsCubicInN)
{
    // Least-squares cubic in n through the fitted values at n = 0..6 predicts n = 7.
    std::vector<BigFloat> v;
    BigFloat fitted_bar(0, bits);
    BigFloat bar(0, bits);
    for (int n = 0; n <= 7; ++n) {
        const AsymFit f = estimate_m(n, 60, 5, bits);
        v.push_back(f.coefficients[2]);
        if (n < 7) {
            fitted_bar = max(fitted_bar, f.error_estimates[2]);
        } else {
            bar = f.error_estimates[2];
        }
    }
    bar += fitted_bar;
    std::vector<std::vector<BigFloat>> a(4, std::vector<BigFloat>(5, BigFloat(0, bits)));
    for (int n = 0; n <= 6; ++n) {
        std::vector<BigFloat> row;
        for (int i = 0; i <= 3; ++i) {
            row.push_back(pow(BigFloat(n, bits), i));
        }
        for (int r = 0; r <= 3; ++r) {
            for (int c = 0; c <= 3; ++c) {
                a[r][c] += row[r] * row[c];
            }
            a[r][4] += row[r] * v[n];
        }
    }
    for (int col = 0; col <= 3; ++col) {
        for (int r = col + 1; r <= 3; ++r) {
            const BigFloat f = a[r][col] / a[col][col];
            for (int c = col; c <= 4; ++c) {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    std::vector<BigFloat> x(4, BigFloat(0, bits));
    for (int i = 3; i >= 0; --i) {
        BigFloat s = a[i][4];
        for (int c = i + 1; c <= 3; ++c) {
            s -= a[i][c] * x[c];
        }
        x[i] = s / a[i][i];
    }
    BigFloat predicted(0, bits);
    for (int i = 0; i <= 3; ++i) {
        predicted += x[i] * pow(BigFloat(7, bits), i);
    }
    EXPECT_LE(abs(predicted - v[7]), BigFloat(10, bits) * bar);
}

TEST(MPolyEval, MatchesExactSubstitution)
{
    const BigRat M = make_rat(-7, 100);
    for (int k = 0; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) {
            const BigFloat approx = published_m_poly(k).eval(BigRat(n), BigFloat(M, bits));
            const BigRat exact = published_m_poly(k).eval_exact(BigRat(n), M);
            EXPECT_LT(abs(approx - BigFloat(exact, bits)).to_double(), 1e-80);
        }
    }
    EXPECT_EQ(published_m_poly(3).n_degree(), 4);
    EXPECT_EQ(published_C_poly(3).m_degree(), 4);
}

TEST(PublishedPolynomials, Examples)
{
    EXPECT_NEAR(published_m(2, 0, bits).to_double(), 0.0103576, 1e-7);
    EXPECT_NEAR(published_C(1, 0, bits).to_double(), 0.2842695, 1e-7);
    for (int n = 0; n <= 5; ++n) {
        EXPECT_EQ(published_m(0, n, bits), BigFloat(1, bits));
        EXPECT_EQ(published_C(0, n, bits), BigFloat(make_rat(1, 4), bits));
    }
    EXPECT_NEAR(constant_M(bits).to_double(), -9.869604401089358 / 144, 1e-16);
    EXPECT_THROW(published_m(4, 0, bits), domain_error);
    EXPECT_THROW(published_C(-1, 0, bits), domain_error);
}

TEST(CompareReport, EmptyList)
{
    const CompareReport r = compare_report(AsymTarget::vol, {}, 60, 5, bits);
    EXPECT_TRUE(r.rows.empty());
    EXPECT_TRUE(r.pass);
}

TEST(CompareReport, ShortWindowIsFlagged)
{
    const CompareReport r = compare_report(AsymTarget::vol, {0}, 20, 5, bits);
    EXPECT_TRUE(r.widened);
    EXPECT_EQ(r.rows.size(), 4u);
}

TEST(CompareReport, LeadingOrdersAtGenus60)
{
    const CompareReport r = compare_report(AsymTarget::vol, {0, 1, 2}, 60, 5, bits);
    EXPECT_FALSE(r.widened);
    ASSERT_EQ(r.rows.size(), 12u);
    for (const auto& row : r.rows) {
        if (row.k <= 1 || (row.k == 2 && row.n == 0)) {
            EXPECT_TRUE(row.pass) << row.n << "," << row.k;
        }
    }
    const CompareReport s = compare_report(AsymTarget::sv, {0, 1, 2}, 60, 5, bits);
    for (const auto& row : s.rows) {
        if (row.k == 0) {
            EXPECT_TRUE(row.pass) << row.n;
        }
    }
}

TEST(AsymTargetNames, Parse)
{
    EXPECT_EQ(parse_asym_target("vol"), AsymTarget::vol);
    EXPECT_EQ(parse_asym_target("sv"), AsymTarget::sv);
    EXPECT_THROW(parse_asym_target("area"), domain_error);
}
