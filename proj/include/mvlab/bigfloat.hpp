#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "mvlab/rational.hpp"

namespace mvlab {

// Arbitrary-precision binary float with an explicit precision in bits.
//
// The result of a binary operation carries the larger of the two operand
// precisions and is rounded to nearest once.
class BigFloat {
public:
    static constexpr long default_bits = 320;
    static constexpr long min_bits = 64;

    explicit BigFloat(long bits = default_bits);
    BigFloat(long value, long bits);
    BigFloat(const BigRat& value, long bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(long bits);
    // Exact binary value of a double.
    static BigFloat from_double(double value, long bits);
    // Parses a decimal string.
    static BigFloat from_string(const std::string& text, long bits);

    long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
    BigFloat with_precision(long bits) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
    friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
    friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
    friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
    BigFloat operator-() const;

    friend bool operator==(const BigFloat& a, const BigFloat& b);
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    double to_double() const;
    // Exact rational value of the stored binary number.
    BigRat to_rational() const;
    // Scientific notation with the given number of significant digits.
    std::string to_string(int digits) const;

    mpfr_srcptr raw() const { return value_; }
    mpfr_ptr raw() { return value_; }

private:
    mpfr_t value_;
};

BigFloat abs(BigFloat x);
BigFloat pow(const BigFloat& base, long exp);
BigFloat log10(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

// Number of decimal digits carried by a binary precision.
int decimal_digits(long bits);

} // namespace mvlab
