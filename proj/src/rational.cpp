#include "mvlab/rational.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "mvlab/error.hpp"

namespace mvlab {

BigRat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw domain_error("zero denominator");
    }
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

BigRat make_rat(long num, long den)
{
    return make_rat(BigInt(num), BigInt(den));
}

std::string to_fraction_string(const BigRat& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_plain_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return s.size() == 1 || s.front() != '0';
}

} // namespace

BigRat parse_fraction(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("expected numerator/denominator");
    }
    std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    const bool negative = !num.empty() && num.front() == '-';
    if (negative) {
        num.remove_prefix(1);
    }
    if (!is_plain_digits(num) || !is_plain_digits(den)) {
        throw std::invalid_argument("malformed fraction");
    }
    if (negative && num == "0") {
        throw std::invalid_argument("negative zero");
    }
    BigInt p(std::string(num), 10);
    const BigInt q(std::string(den), 10);
    if (q == 0) {
        throw std::invalid_argument("zero denominator");
    }
    if (negative) {
        p = -p;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) {
        throw std::invalid_argument("unreduced fraction");
    }
    return BigRat(p, q);
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pow_int(long base, unsigned long exp)
{
    BigInt b(base);
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

BigRat double_factorial(long m)
{
    if (m >= -1) {
        BigInt r = 1;
        for (long k = m; k > 1; k -= 2) {
            r *= k;
        }
        return BigRat(r);
    }
    if (m % 2 == 0) {
        throw domain_error("double factorial of a negative even integer");
    }
    // m!! = (m+2)!! / (m+2), unrolled from (-1)!! = 1.
    BigRat r = 1;
    for (long k = -1; k > m; k -= 2) {
        r /= k;
    }
    return r;
}

BigRat pochhammer(const BigRat& a, unsigned long n)
{
    BigRat r = 1;
    BigRat f = a;
    for (unsigned long i = 0; i < n; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

BigRat bernoulli(unsigned long m)
{
    static std::mutex mutex;
    static std::vector<BigRat> table{BigRat(1)};

    std::lock_guard lock(mutex);
    while (table.size() <= m) {
        // sum_{k=0}^{j} C(j+1,k) B_k = 0 solved for B_j.
        const unsigned long j = table.size();
        BigRat s = 0;
        for (unsigned long k = 0; k < j; ++k) {
            s += BigRat(binomial(j + 1, k)) * table[k];
        }
        BigRat b = -s / BigRat(j + 1);
        table.push_back(b);
    }
    return table[m];
}

} // namespace mvlab
