#pragma once

// Exact integer/rational arithmetic and the combinatorial helpers built on it.
//
// BigRat is GMP's mpq_class. Every arithmetic operator returns a canonical
// (lowest terms, positive denominator) value; values built from a raw
// numerator/denominator pair must go through make_rat().

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mvlab {

using BigInt = mpz_class;
using BigRat = mpq_class;

BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den = 1);

// Always "p/q", including "0/1" and "3/1".
std::string to_fraction_string(const BigRat& r);

// Strict inverse of to_fraction_string: rejects unreduced fractions, zero or
// negative denominators, signs on the denominator, leading zeros and "-0".
// Throws std::invalid_argument with a short reason.
BigRat parse_fraction(std::string_view text);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);
BigInt pow_int(long base, unsigned long exp);

// m!! for any odd or even integer m, extended to negative odd m by
// m!! = (m+2)!!/(m+2): (-1)!! = 1, (-3)!! = -1, (-5)!! = 1/3, ...
// Negative even m is undefined and throws mvlab::domain_error.
BigRat double_factorial(long m);

// Rising factorial a(a+1)...(a+n-1); 1 for n = 0.
BigRat pochhammer(const BigRat& a, unsigned long n);

// B_m with B_1 = -1/2. Memoized; safe to call concurrently.
BigRat bernoulli(unsigned long m);

} // namespace mvlab
