#pragma once

#include <map>
#include <string>
#include <utility>

#include "mvlab/rational.hpp"

namespace mvlab {

// Finite Laurent polynomial sum_e c_e T^e in the variable T = sqrt(1 - 2x).
//
// Zero coefficients are never stored, so two equal polynomials have
// identical term maps. The derivation D_T = d/dx = -(1/T) d/dT acts as
// D_T(T^e) = -e T^(e-2).
class LaurentT {
public:
    using Terms = std::map<int, BigRat>;

    LaurentT() = default;
    LaurentT(const BigRat& constant);
    static LaurentT monomial(int exponent, const BigRat& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    BigRat coeff(int exponent) const;
    int min_exponent() const;
    int max_exponent() const;

    // Adds c T^e, dropping the term if it cancels.
    void add_term(int exponent, const BigRat& c);

    LaurentT& operator+=(const LaurentT& rhs);
    LaurentT& operator-=(const LaurentT& rhs);
    LaurentT& operator*=(const LaurentT& rhs);
    LaurentT& operator*=(const BigRat& k);

    friend LaurentT operator+(LaurentT a, const LaurentT& b) { return a += b; }
    friend LaurentT operator-(LaurentT a, const LaurentT& b) { return a -= b; }
    friend LaurentT operator*(const LaurentT& a, const LaurentT& b);
    friend LaurentT operator*(LaurentT a, const BigRat& k) { return a *= k; }
    friend LaurentT operator*(const BigRat& k, LaurentT a) { return a *= k; }
    LaurentT operator-() const;

    friend bool operator==(const LaurentT& a, const LaurentT& b) { return a.terms_ == b.terms_; }

    // Multiplication by T^s.
    LaurentT shifted(int s) const;
    // Value at T = 1, i.e. at x = 0.
    BigRat at_one() const;

    std::string to_string() const;

private:
    Terms terms_;
};

// D_T^k(p).
LaurentT laurent_dt(const LaurentT& p, unsigned k = 1);

// x as a polynomial in T: (1 - T^2)/2.
LaurentT x_in_T();

// A genus component of the free energy: log_coeff * log(1/T) + laurent.
struct GenusBlock {
    BigRat log_coeff;
    LaurentT laurent;

    friend bool operator==(const GenusBlock&, const GenusBlock&) = default;
};

// d/dx of a genus block; D_T(log(1/T)) = T^-2 so the result is pure Laurent.
LaurentT derivative(const GenusBlock& h);

} // namespace mvlab
