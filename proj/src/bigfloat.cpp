#include "mvlab/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "mvlab/error.hpp"

namespace mvlab {

namespace {

long checked_bits(long bits)
{
    if (bits < BigFloat::min_bits) {
        throw domain_error("BigFloat precision below " + std::to_string(BigFloat::min_bits) + " bits");
    }
    return bits;
}

} // namespace

BigFloat::BigFloat(long bits)
{
    mpfr_init2(value_, checked_bits(bits));
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, long bits)
{
    mpfr_init2(value_, checked_bits(bits));
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigRat& value, long bits)
{
    mpfr_init2(value_, checked_bits(bits));
    mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    // Leave the moved-from object valid at minimum size.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

BigFloat BigFloat::pi(long bits)
{
    BigFloat r(bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double value, long bits)
{
    BigFloat r(bits);
    mpfr_set_d(r.value_, value, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& text, long bits)
{
    BigFloat r(bits);
    if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("not a decimal number: " + text);
    }
    return r;
}

BigFloat BigFloat::with_precision(long bits) const
{
    BigFloat r(bits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

namespace {

// Promotes lhs to the wider precision before an in-place operation.
void widen(mpfr_ptr lhs, mpfr_srcptr rhs)
{
    if (mpfr_get_prec(rhs) > mpfr_get_prec(lhs)) {
        mpfr_prec_round(lhs, mpfr_get_prec(rhs), MPFR_RNDN);
    }
}

} // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs)
{
    widen(value_, rhs.value_);
    mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs)
{
    widen(value_, rhs.value_);
    mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs)
{
    widen(value_, rhs.value_);
    mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs)
{
    widen(value_, rhs.value_);
    mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(*this);
    mpfr_neg(r.value_, r.value_, MPFR_RNDN);
    return r;
}

bool operator==(const BigFloat& a, const BigFloat& b)
{
    return mpfr_equal_p(a.value_, b.value_) != 0;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b)
{
    if (mpfr_unordered_p(a.value_, b.value_)) {
        return std::partial_ordering::unordered;
    }
    const int c = mpfr_cmp(a.value_, b.value_);
    if (c < 0) {
        return std::partial_ordering::less;
    }
    return c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

double BigFloat::to_double() const
{
    return mpfr_get_d(value_, MPFR_RNDN);
}

BigRat BigFloat::to_rational() const
{
    if (!mpfr_number_p(value_)) {
        throw domain_error("non-finite BigFloat has no rational value");
    }
    BigInt mant;
    const mpfr_exp_t exp = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
    BigRat r(mant);
    if (exp >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    return r;
}

std::string BigFloat::to_string(int digits) const
{
    digits = std::max(digits, 2);
    const int size = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
    std::string out(static_cast<std::size_t>(size) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), "%.*Re", digits - 1, value_);
    out.resize(static_cast<std::size_t>(size));
    return out;
}

BigFloat abs(BigFloat x)
{
    mpfr_abs(x.raw(), x.raw(), MPFR_RNDN);
    return x;
}

BigFloat pow(const BigFloat& base, long exp)
{
    BigFloat r(base.precision());
    mpfr_pow_si(r.raw(), base.raw(), exp, MPFR_RNDN);
    return r;
}

BigFloat log10(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_log10(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b)
{
    return a < b ? b : a;
}

int decimal_digits(long bits)
{
    return static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
}

} // namespace mvlab
