#include "mvlab/volumes.hpp"

#include <mutex>
#include <vector>

#include "mvlab/error.hpp"
#include "mvlab/genus.hpp"

namespace mvlab {

BigFloat PiScaled::numeric(long bits) const
{
    const long work = bits + 32;
    BigFloat v(coeff, work);
    const BigFloat pi = BigFloat::pi(work);
    v *= pow(pi, pi_half_exponent / 2);
    if (pi_half_exponent % 2 != 0) {
        BigFloat root(work);
        mpfr_sqrt(root.raw(), pi.raw(), MPFR_RNDN);
        v *= pi_half_exponent > 0 ? root : BigFloat(1, work) / root;
    }
    return v.with_precision(bits);
}

std::string to_string(const PiScaled& v)
{
    std::string out = to_fraction_string(v.coeff);
    if (v.pi_half_exponent == 0) {
        return out;
    }
    out += " * pi^";
    if (v.pi_half_exponent % 2 == 0) {
        return out + std::to_string(v.pi_half_exponent / 2);
    }
    return out + "(" + std::to_string(v.pi_half_exponent) + "/2)";
}

namespace {

// a_{g,n} for the exact volume formulas; the fast genus path, which every
// suite checks against both recursions.
BigRat agn(int g, int n)
{
    if (g < 0 || n < 0) {
        return 0;
    }
    return agn_from_series(g, n);
}

void require_stable(int g, int n)
{
    if (g < 0 || n < 0 || 2 * g - 2 + n <= 0) {
        throw domain_error("(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) + ") needs 2g - 2 + n > 0");
    }
}

} // namespace

PiScaled volume(int g, int n)
{
    require_stable(g, n);
    if (g == 0 && n == 3) {
        return volume_closed_g0(3);
    }
    const BigRat prefactor = make_rat(pow_int(2, 2 * g + 1) * factorial(4 * g - 4 + n), factorial(6 * g - 7 + 2 * n));
    return {prefactor * agn(g, n), 2 * (6 * g - 6 + 2 * n)};
}

PiScaled volume_closed_g0(int n)
{
    if (n < 3) {
        throw domain_error("genus-0 volume needs n >= 3");
    }
    const BigRat c = n <= 5 ? BigRat(pow_int(2, 5 - n)) : make_rat(BigInt(1), pow_int(2, n - 5));
    return {c, 2 * (2 * n - 6)};
}

PiScaled volume_closed_g1(int n)
{
    if (n < 1) {
        throw domain_error("genus-1 volume needs n >= 1");
    }
    const BigRat s = BigRat(factorial(n)) / double_factorial(2 * n - 1) + make_rat(BigInt(2 * n), BigInt(2 * n - 1) * pow_int(2, n));
    return {s / 3, 2 * (2 * n)};
}

BigRat lambda_g_value(int g)
{
    if (g < 2) {
        throw domain_error("lambda_g value defined for g >= 2");
    }
    const BigInt p = pow_int(2, 2 * g - 1);
    const BigRat b = abs(bernoulli(2 * g));
    return make_rat(p - 1, p) * double_factorial(4 * g - 7) * b / BigRat(factorial(2 * g));
}

BigRat cg_seq(int g)
{
    if (g < 0) {
        throw domain_error("c_g defined for g >= 0");
    }
    static std::mutex mutex;
    static std::vector<BigRat> seq{BigRat(-1), BigRat(2), BigRat(98)};
    std::lock_guard lock(mutex);
    while (static_cast<int>(seq.size()) <= g) {
        const int h = static_cast<int>(seq.size());
        BigRat conv = 0;
        for (int k = 2; k <= h - 2; ++k) {
            conv += seq[k] * seq[h - k];
        }
        seq.push_back(BigRat(50 * (h - 1) * (h - 1)) * seq[h - 1] + conv / 2);
    }
    return seq[g];
}

PiScaled kappa(int g)
{
    if (g < 0) {
        throw domain_error("kappa_g defined for g >= 0");
    }
    // Gamma((5g-1)/2) = Gamma(m + 1/2) = (2m-1)!! sqrt(pi) / 2^m with m = (5g-2)/2 for
    // even g; for odd g the argument is an integer.
    BigRat gamma_rat;
    int gamma_half = 0;
    if (g % 2 == 0) {
        const int m = (5 * g - 2) / 2;
        const BigRat pm = m >= 0 ? BigRat(pow_int(2, m)) : make_rat(BigInt(1), pow_int(2, -m));
        gamma_rat = double_factorial(2 * m - 1) / pm;
        gamma_half = 1;
    } else {
        gamma_rat = BigRat(factorial((5 * g - 1) / 2 - 1));
    }
    const BigRat c = BigRat(64) * cg_seq(g) / (BigRat(pow_int(384, g)) * gamma_rat);
    return {c, 12 * g - 11 - gamma_half};
}

PiScaled sv_constant(int g, int n)
{
    require_stable(g, n);
    if (3 * g - 3 + n == 0) {
        throw domain_error("Q_{0,3} is a point, Siegel-Veech constant undefined");
    }
    const BigRat a = agn(g, n);
    if (sgn(a) == 0) {
        throw domain_error("a_{g,n} = 0, Siegel-Veech constant undefined");
    }
    auto term = [](int gi, int ni) -> BigRat {
        if (gi < 0 || ni < 1 || 3 * gi - 3 + ni <= 0) {
            return 0;
        }
        return agn(gi, ni);
    };
    BigRat s = BigRat(n * (n - 1)) * agn(g, n - 1) + agn(g - 1, n + 2);
    for (int g1 = 0; g1 <= g; ++g1) {
        const int g2 = g - g1;
        for (int n1 = 1; n1 <= n + 1; ++n1) {
            const int n2 = n + 2 - n1;
            const BigRat t = term(g1, n1);
            if (sgn(t) == 0) {
                continue;
            }
            s += BigRat(binomial(n, n1 - 1)) * t * term(g2, n2);
        }
    }
    return {s / (4 * a), -4};
}

} // namespace mvlab
